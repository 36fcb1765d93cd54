#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>

#include "hypcr/hamiltonian.hpp"
#include "hypcr/lift.hpp"
#include "hypcr/moebius.hpp"

using namespace hypcr;

namespace {

MoebiusMap H(double s) { return MoebiusMap(std::cosh(s), std::sinh(s)); }

std::mt19937_64 rng(20240817);

double urand(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

LieElement random_elem(double scale = 1.0) {
    return {urand(-scale, scale), cplx(urand(-scale, scale), urand(-scale, scale))};
}

cplx random_disc_point(double rmax = 0.9) {
    double r = std::sqrt(urand(0.0, rmax * rmax));
    return std::polar(r, urand(0.0, kTwoPi));
}

MoebiusMap random_map(double scale = 1.0) {
    return exp_lie(random_elem(scale), 1.0);
}

// 2x2 complex matrices as independent oracles.
using Mat2 = std::array<cplx, 4>;

Mat2 mat_of(const MoebiusMap& g) {
    return {g.a(), g.b(), std::conj(g.b()), std::conj(g.a())};
}
Mat2 mat_of(const LieElement& g) {
    return {cplx(0.0, g.alpha), g.beta, std::conj(g.beta), cplx(0.0, -g.alpha)};
}
Mat2 mat_mul(const Mat2& m, const Mat2& n) {
    return {m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3],
            m[2] * n[0] + m[3] * n[2], m[2] * n[1] + m[3] * n[3]};
}
double mat_dist(const Mat2& m, const Mat2& n) {
    double plus = 0.0, minus = 0.0;
    for (int k = 0; k < 4; ++k) {
        plus += std::norm(m[k] - n[k]);
        minus += std::norm(m[k] + n[k]);
    }
    return std::sqrt(std::min(plus, minus));
}

}  // namespace

TEST_CASE("compose: group laws and closed-form product") {
    MoebiusMap g = random_map();
    CHECK(distance(g * g.inverse(), MoebiusMap::identity()) < 1e-12);
    MoebiusMap h = random_map();
    CHECK(distance(MoebiusMap::identity() * h, h) < 1e-15);

    // H(s) H(s') = H(s+s'), and against the raw matrix product
    CHECK(distance(H(0.7) * H(0.4), H(1.1)) < 1e-12);
    Mat2 prod = mat_mul(mat_of(H(0.7)), mat_of(H(0.4)));
    CHECK(mat_dist(prod, mat_of(H(0.7) * H(0.4))) < 1e-12);

    // associativity / identity / inverse over random triples
    for (int it = 0; it < 10000; ++it) {
        MoebiusMap x = random_map(0.8), y = random_map(0.8), z = random_map(0.8);
        CHECK(distance((x * y) * z, x * (y * z)) < 1e-12);
        CHECK(distance(x * MoebiusMap::identity(), x) < 1e-12);
        CHECK(distance((x * y).inverse(), y.inverse() * x.inverse()) < 1e-12);
    }
}

TEST_CASE("act_disc: evaluation, inverse law, domain error") {
    cplx w(0.3, 0.1);
    CHECK(std::abs(act_disc(MoebiusMap::identity(), w) - w) == 0.0);
    CHECK(std::abs(act_disc(H(0.8), 0.0) - cplx(std::tanh(0.8))) < 1e-15);
    for (int it = 0; it < 200; ++it) {
        MoebiusMap g = random_map();
        cplx z = random_disc_point(0.95);
        CHECK(std::abs(act_disc(g, act_disc(g.inverse(), z)) - z) < 1e-12);
        CHECK(std::abs(act_disc(g, z)) < 1.0);
    }
    CHECK_THROWS_AS(act_disc(H(1.0), cplx(1.0, 0.0)), std::domain_error);
}

TEST_CASE("act_boundary: fixed angles and elliptic rotation") {
    BoundaryPoint p(1.234);
    CHECK(act_boundary(MoebiusMap::identity(), p).angle == doctest::Approx(1.234).epsilon(1e-14));
    CHECK(act_boundary(H(0.9), BoundaryPoint(0.0)).angle == doctest::Approx(0.0));
    CHECK(act_boundary(H(0.9), BoundaryPoint(kPi)).angle == doctest::Approx(kPi));
    // exp of (alpha = pi/2, beta = 0) rotates by pi
    MoebiusMap rot = exp_lie({kPi / 2.0, 0.0}, 1.0);
    for (double th : {0.3, 2.0, 5.5})
        CHECK(act_boundary(rot, BoundaryPoint(th)).angle ==
              doctest::Approx(normalize_angle(th + kPi)).epsilon(1e-12));
}

TEST_CASE("classify: trace bands and conjugation invariance") {
    CHECK(H(1.0).trace() == doctest::Approx(2.0 * std::cosh(1.0)));
    CHECK(classify(H(1.0)) == IsometryClass::hyperbolic);
    CHECK(classify(exp_lie({0.25, 0.0}, 1.0)) == IsometryClass::elliptic);  // trace 2 cos 0.25
    CHECK(classify(MoebiusMap::identity()) == IsometryClass::identity);
    for (int it = 0; it < 300; ++it) {
        MoebiusMap g = random_map();
        if (std::abs(std::abs(g.trace()) - 2.0) < 1e-3) continue;  // stay off the band
        MoebiusMap k = random_map();
        CHECK(classify(k * g * k.inverse()) == classify(g));
    }
}

TEST_CASE("fixed_points: labels, inverse, conjugation equivariance") {
    auto fp = fixed_points(H(0.6));
    CHECK(fp.l_small.angle == doctest::Approx(kPi));
    CHECK(fp.l_big.angle == doctest::Approx(0.0));

    for (int it = 0; it < 200; ++it) {
        MoebiusMap g = exp_lie({0.0, cplx(urand(0.3, 1.5), urand(-1.0, 1.0))}, 1.0);
        if (classify(g) != IsometryClass::hyperbolic) continue;
        auto f = fixed_points(g);
        CHECK(act_boundary(g, f.l_small).angle == doctest::Approx(f.l_small.angle).epsilon(1e-9));
        CHECK(act_boundary(g, f.l_big).angle == doctest::Approx(f.l_big.angle).epsilon(1e-9));
        auto finv = fixed_points(g.inverse());
        CHECK(finv.l_small.angle == doctest::Approx(f.l_big.angle));
        CHECK(finv.l_big.angle == doctest::Approx(f.l_small.angle));
        MoebiusMap k = random_map(0.7);
        auto fc = fixed_points(k * g * k.inverse());
        CHECK(fc.l_small.angle ==
              doctest::Approx(act_boundary(k, f.l_small).angle).epsilon(1e-8));
        CHECK(fc.l_big.angle == doctest::Approx(act_boundary(k, f.l_big).angle).epsilon(1e-8));
    }
    CHECK_THROWS_AS(fixed_points(MoebiusMap::identity()), std::invalid_argument);
}

TEST_CASE("exp_lie: closed forms, series oracle, one-parameter law") {
    CHECK(distance(exp_lie(random_elem(), 0.0), MoebiusMap::identity()) < 1e-15);

    MoebiusMap e1 = exp_lie({0.0, 1.0}, 0.8);
    CHECK(std::abs(e1.a() - cplx(std::cosh(0.8))) < 1e-14);
    CHECK(std::abs(e1.b() - cplx(std::sinh(0.8))) < 1e-14);

    MoebiusMap e2 = exp_lie({1.0, 0.0}, 0.6);
    CHECK(std::abs(e2.a() - std::polar(1.0, 0.6)) < 1e-14);
    CHECK(std::abs(e2.b()) < 1e-14);

    // truncated power-series oracle
    for (int it = 0; it < 50; ++it) {
        LieElement g = random_elem(0.4);
        Mat2 sum{1.0, 0.0, 0.0, 1.0};
        Mat2 term{1.0, 0.0, 0.0, 1.0};
        Mat2 gm = mat_of(g);
        for (int k = 1; k <= 24; ++k) {
            term = mat_mul(term, gm);
            for (auto& c : term) c /= double(k);
            for (int m = 0; m < 4; ++m) sum[m] += term[m];
        }
        CHECK(mat_dist(sum, mat_of(exp_lie(g, 1.0))) < 1e-12);
    }

    for (int it = 0; it < 300; ++it) {
        LieElement g = random_elem();
        double t = urand(-2.0, 2.0), s = urand(-2.0, 2.0);
        CHECK(distance(exp_lie(g, t + s), exp_lie(g, t) * exp_lie(g, s)) < 1e-10);
    }
}

TEST_CASE("log_lie inverts exp_lie near the identity") {
    for (int it = 0; it < 300; ++it) {
        LieElement g = random_elem(0.8);
        LieElement back = log_lie(exp_lie(g, 1.0));
        CHECK(norm(back - g) < 1e-11 * (1.0 + norm(g)));
    }
}

TEST_CASE("lie_bracket: commutator oracle, antisymmetry, Jacobi") {
    LieElement zero = lie_bracket(random_elem(), random_elem() * 0.0);
    (void)zero;
    LieElement g = random_elem();
    CHECK(norm(lie_bracket(g, g)) == 0.0);

    LieElement br = lie_bracket({1.0, 0.0}, {0.0, 1.0});
    CHECK(br.alpha == doctest::Approx(0.0));
    CHECK(std::abs(br.beta - cplx(0.0, 2.0)) < 1e-15);

    for (int it = 0; it < 400; ++it) {
        LieElement x = random_elem(), y = random_elem(), z = random_elem();
        // against the raw matrix commutator
        Mat2 mx = mat_of(x), my = mat_of(y);
        Mat2 comm = mat_mul(mx, my);
        Mat2 rev = mat_mul(my, mx);
        for (int m = 0; m < 4; ++m) comm[m] -= rev[m];
        Mat2 ours = mat_of(lie_bracket(x, y));
        double d = 0.0;
        for (int m = 0; m < 4; ++m) d += std::norm(comm[m] - ours[m]);
        CHECK(std::sqrt(d) < 1e-13);

        CHECK(norm(lie_bracket(x, y) + lie_bracket(y, x)) < 1e-14);
        LieElement jacobi = lie_bracket(x, lie_bracket(y, z)) +
                            lie_bracket(y, lie_bracket(z, x)) +
                            lie_bracket(z, lie_bracket(x, y));
        CHECK(norm(jacobi) < 1e-13 * (1.0 + norm(x) * norm(y) * norm(z)));
    }
}

TEST_CASE("hamiltonian_disc: values, blow-up, domain error") {
    CHECK(hamiltonian_disc({1.0, 0.0}, 0.0) == doctest::Approx(0.5));
    for (int it = 0; it < 50; ++it) {
        LieElement g = random_elem();
        CHECK(hamiltonian_disc(g, 0.0) == doctest::Approx(g.alpha / 2.0));
    }
    double h1 = hamiltonian_disc({1.0, 0.0}, 0.9);
    double h2 = hamiltonian_disc({1.0, 0.0}, 0.99);
    double h3 = hamiltonian_disc({1.0, 0.0}, 0.999);
    CHECK(h1 < h2);
    CHECK(h2 < h3);
    CHECK(h3 > 100.0);
    CHECK_THROWS_AS(hamiltonian_disc({1.0, 0.0}, cplx(1.0, 0.0)), std::domain_error);
}

TEST_CASE("vector_field_disc: values, boundary tangency, flow derivative") {
    CHECK(std::abs(vector_field_disc({1.0, 0.0}, 0.0)) == 0.0);
    CHECK(std::abs(vector_field_disc({0.0, 1.0}, 0.0) - cplx(1.0)) == 0.0);

    for (int k = 0; k < 100; ++k) {
        double th = kTwoPi * k / 100.0;
        cplx w = std::polar(1.0, th);
        cplx x = vector_field_disc(random_elem(), w);
        CHECK(std::abs(std::real(std::conj(w) * x)) < 1e-13 * (1.0 + std::abs(x)));
    }

    // finite-difference derivative of the flow
    for (int it = 0; it < 300; ++it) {
        LieElement g = random_elem();
        cplx w = random_disc_point(0.9);
        double eps = 1e-6;
        cplx fd = (act_disc(exp_lie(g, eps), w) - act_disc(exp_lie(g, -eps), w)) / (2.0 * eps);
        cplx x = vector_field_disc(g, w);
        CHECK(std::abs(fd - x) < 1e-6 * (1.0 + std::abs(x)));
    }
}

TEST_CASE("hamiltonian field pairs with the Hamiltonian: i_X omega = -dH") {
    for (int it = 0; it < 400; ++it) {
        LieElement g = random_elem();
        cplx w = random_disc_point(0.9);
        double hx, hy;
        hamiltonian_disc_grad(g, w, hx, hy);
        // finite-difference cross-check of the analytic gradient
        double eps = 1e-6;
        double fdx = (hamiltonian_disc(g, w + eps) - hamiltonian_disc(g, w - eps)) / (2 * eps);
        double fdy = (hamiltonian_disc(g, w + cplx(0, eps)) -
                      hamiltonian_disc(g, w - cplx(0, eps))) /
                     (2 * eps);
        CHECK(hx == doctest::Approx(fdx).epsilon(2e-5));
        CHECK(hy == doctest::Approx(fdy).epsilon(2e-5));

        cplx x = ham_vector_field_disc(g, w);
        double lam = 1.0 / std::pow(1.0 - std::norm(w), 2);
        // i_X omega = -dH reads lam*X2 = H_x, lam*X1 = -H_y
        double scale = 1.0 + std::abs(hx) + std::abs(hy);
        CHECK(std::abs(lam * x.imag() - hx) < 1e-5 * scale);
        CHECK(std::abs(lam * x.real() + hy) < 1e-5 * scale);
    }
}

TEST_CASE("poisson_residual vanishes (homomorphism property)") {
    CHECK(poisson_residual(random_elem(), {0.3, cplx(0.1, -0.4)}, 0.0) < 1e-12);
    LieElement g = {0.4, cplx(-0.2, 0.7)};
    CHECK(poisson_residual(g, g, cplx(0.1, 0.2)) < 1e-14);
    CHECK(poisson_residual({1.0, 0.0}, {0.0, 1.0}, cplx(0.2, 0.3)) < 1e-8);

    double worst_analytic = 0.0, worst_fd = 0.0;
    for (int it = 0; it < 1000; ++it) {
        LieElement g1 = random_elem(), g2 = random_elem();
        cplx w = random_disc_point(0.9);
        worst_analytic = std::max(worst_analytic, poisson_residual(g1, g2, w));
        // finite-difference bracket oracle
        double eps = 1e-6;
        auto grad = [&](const LieElement& g, double& gx, double& gy) {
            gx = (hamiltonian_disc(g, w + eps) - hamiltonian_disc(g, w - eps)) / (2 * eps);
            gy = (hamiltonian_disc(g, w + cplx(0, eps)) - hamiltonian_disc(g, w - cplx(0, eps))) /
                 (2 * eps);
        };
        double g1x, g1y, g2x, g2y;
        grad(g1, g1x, g1y);
        grad(g2, g2x, g2y);
        double D = 1.0 - std::norm(w);
        double fd_bracket = D * D * (g1x * g2y - g1y * g2x);
        worst_fd = std::max(worst_fd,
                            std::abs(fd_bracket - hamiltonian_disc(lie_bracket(g1, g2), w)));
    }
    CHECK(worst_analytic < 1e-6);
    CHECK(worst_fd < 1e-4);
}

TEST_CASE("cayley: normalization and round trip") {
    CHECK(std::abs(cayley(0.0) - cplx(0.0, 1.0)) == 0.0);
    CHECK(std::abs(cayley(cplx(-1.0 + 1e-9, 0.0))) < 1e-8);
    for (int it = 0; it < 500; ++it) {
        cplx w = random_disc_point(0.99);
        CHECK(std::abs(cayley_inverse(cayley(w)) - w) < 1e-12);
    }
    CHECK_THROWS_AS(cayley(cplx(1.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(cayley_inverse(cplx(0.0, -1.0)), std::domain_error);
}

TEST_CASE("tangency: H vanishes along a tangent geodesic") {
    // gamma = (0, beta real) is tangent to the real-axis geodesic
    for (double beta : {0.5, 1.0, -2.0}) {
        for (double x = -0.95; x < 0.96; x += 0.05) {
            CHECK(std::abs(hamiltonian_disc({0.0, beta}, cplx(x, 0.0))) < 1e-10);
            CHECK(std::abs(flow_hamiltonian_disc({0.0, beta}, cplx(x, 0.0))) < 1e-10);
        }
    }
    // general geodesics via the tangent generator: the flow vanishes at both
    // ideal endpoints, and the flow-paired Hamiltonian vanishes on the germ
    for (int it = 0; it < 100; ++it) {
        BoundaryPoint p(urand(0.0, kTwoPi)), q(urand(0.0, kTwoPi));
        if (std::abs(std::remainder(p.angle - q.angle, kTwoPi)) < 0.1) continue;
        LieElement tg = tangent_generator(p, q);
        CHECK(std::abs(vector_field_disc(tg, p.point())) < 1e-12);
        CHECK(std::abs(vector_field_disc(tg, q.point())) < 1e-12);
        // a point on the p-q geodesic: the closest point to the origin of the
        // arc orthogonal to the circle (the origin itself for a diameter)
        cplx u = p.point(), v = q.point();
        double denom = 1.0 + std::real(u * std::conj(v));
        cplx anchor = 0.0;
        if (std::abs(denom) > 1e-14) {
            cplx center = (u + v) / denom;
            double radius = std::sqrt(std::norm(center) - 1.0);
            anchor = center / (std::abs(center) * (std::abs(center) + radius));
        }
        GeodesicGerm germ(q, anchor);
        for (double sig : {-1.0, 0.0, 1.5})
            CHECK(std::abs(flow_hamiltonian_disc(tg, germ_point(germ, sig))) < 1e-9);
    }
}

TEST_CASE("natural lift: identity, elliptic translation, trichotomy") {
    NaturalLift id = NaturalLift::identity();
    CHECK(id.apply(1.7) == doctest::Approx(1.7));

    // lift of a rotation path by angle phi translates by phi
    double phi = 2.6;
    MoebiusMap rot = exp_lie({phi / 2.0, 0.0}, 1.0);
    NaturalLift rlift(rot, -phi / 2.0);
    CHECK(rlift.apply(0.4) == doctest::Approx(0.4 + phi).epsilon(1e-12));

    // trichotomy for H(1) with rotation number 0
    MoebiusMap g = H(1.0);
    NaturalLift lift = NaturalLift::with_rotation_number(g, 0);
    auto fp = fixed_points(g);
    CHECK(lift.apply(fp.l_small.angle) - fp.l_small.angle == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(lift.apply(fp.l_big.angle + kTwoPi) - (fp.l_big.angle + kTwoPi) ==
          doctest::Approx(0.0).epsilon(1e-12));
    // l_small = pi, l_big = 0: shift is positive on (pi, 2pi), negative on (0, pi)
    double shift_pos = lift.apply(3.0 * kPi / 2.0) - 3.0 * kPi / 2.0;
    CHECK(shift_pos > 0.0);
    CHECK(shift_pos < kTwoPi);
    double shift_neg = lift.apply(kPi / 2.0) - kPi / 2.0;
    CHECK(shift_neg < 0.0);
    CHECK(shift_neg > -kTwoPi);

    // apply_inverse and the lifted inverse element
    for (double y : {-7.3, 0.2, 9.9}) {
        CHECK(lift.apply(lift.apply_inverse(y)) == doctest::Approx(y).epsilon(1e-10));
        CHECK(lift.inverse().apply(y) == doctest::Approx(lift.apply_inverse(y)).epsilon(1e-9));
    }

    // deck equivariance
    CHECK(lift.apply(0.3 + kTwoPi) == doctest::Approx(lift.apply(0.3) + kTwoPi));
    CHECK(deck_shift(lift, 2).apply(0.3) == doctest::Approx(lift.apply(0.3) + 2 * kTwoPi));
    CHECK(lift.rotation_number() == 0);
    CHECK(deck_shift(lift, 2).rotation_number() == 2);
}

TEST_CASE("hyperbolic_with_axis hits prescribed axis and trace") {
    for (int it = 0; it < 200; ++it) {
        BoundaryPoint ls(urand(0.0, kTwoPi)), lb(urand(0.0, kTwoPi));
        if (std::abs(std::sin(0.5 * (lb.angle - ls.angle))) < 0.05) continue;
        double tau = urand(2.05, 12.0);
        MoebiusMap g = hyperbolic_with_axis(ls, lb, tau);
        CHECK(std::abs(g.trace()) == doctest::Approx(tau).epsilon(1e-12));
        auto fp = fixed_points(g);
        CHECK(fp.l_small.angle == doctest::Approx(ls.angle).epsilon(1e-9));
        CHECK(fp.l_big.angle == doctest::Approx(lb.angle).epsilon(1e-9));
    }
}

TEST_CASE("germ geodesics: unit speed, endpoint limit") {
    for (int it = 0; it < 100; ++it) {
        GeodesicGerm germ(BoundaryPoint(urand(0.0, kTwoPi)), random_disc_point(0.7));
        CHECK(std::abs(germ_point(germ, 0.0) - germ.anchor) < 1e-14);
        // hyperbolic unit speed in the curvature -4 normalization
        for (double sig : {-1.0, 0.0, 2.0}) {
            cplx dp = germ_point_derivative(germ, sig);
            double speed = std::abs(dp) / (1.0 - std::norm(germ_point(germ, sig)));
            CHECK(speed == doctest::Approx(1.0).epsilon(1e-10));
        }
        cplx far = germ_point(germ, 9.0);
        CHECK(std::abs(far - germ.endpoint.point()) < 1e-6);
        double d_anchor = std::abs(germ_other_endpoint(germ).point() - germ.endpoint.point());
        CHECK(d_anchor > 1e-6);  // distinct ideal endpoints
    }
}

TEST_CASE("boundary point normalization is idempotent") {
    for (double a : {-7.3, 0.0, 1.0, kTwoPi, 13.9, -kTwoPi}) {
        BoundaryPoint p(a);
        BoundaryPoint q(p.angle);
        CHECK(p.angle == q.angle);
        CHECK(p.angle >= 0.0);
        CHECK(p.angle < kTwoPi);
    }
    LiftedPoint l(7.5);
    CHECK(l.project().angle == doctest::Approx(normalize_angle(7.5)));
}
