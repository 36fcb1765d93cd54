#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "hypcr/connection.hpp"

using namespace hypcr;

namespace {
std::mt19937_64 rng(99);
double urand(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}
LieElement random_elem(double s = 1.0) {
    return {urand(-s, s), cplx(urand(-s, s), urand(-s, s))};
}

// smooth circle-valued gauge loop with Phi(0) = k
GaugePath<SU11Group> make_loop_gauge(const MoebiusMap& k, const LieElement& g1,
                                     const LieElement& g2, int nodes) {
    GaugePath<SU11Group> phi;
    phi.domain = PathDomain::circle;
    phi.samples.reserve(nodes);
    for (int j = 0; j < nodes; ++j) {
        double t = double(j) / nodes;
        phi.samples.push_back(k * exp_lie(g1, std::sin(kTwoPi * t)) *
                              exp_lie(g2, 1.0 - std::cos(kTwoPi * t)));
    }
    return phi;
}
}  // namespace

TEST_CASE("integrate_transport: trivial and constant connections") {
    auto zero = make_constant_connection<SU11Group>({0.0, 0.0}, 64);
    CHECK(distance(integrate_transport(zero, 0.0, 1.0), MoebiusMap::identity()) < 1e-14);

    LieElement g = random_elem();
    auto con = make_constant_connection<SU11Group>(g, 64);
    CHECK(distance(integrate_transport(con, 0.0, 1.0), exp_lie(g, 1.0)) < 1e-9);
}

TEST_CASE("integrate_transport: manufactured non-autonomous connection") {
    // a_t = p'(t) gamma with p(t) = t^2 has transport exp(gamma) at t = 1
    LieElement g = random_elem();
    auto con = make_profiled_connection<SU11Group>(g, [](double t) { return 2.0 * t; }, 2048);
    CHECK(distance(integrate_transport(con, 0.0, 1.0), exp_lie(g, 1.0)) < 1e-6);
}

TEST_CASE("integrate_transport: concatenation law at N = 2048") {
    LieElement g1 = random_elem(0.8), g2 = random_elem(0.8);
    PathConnection<SU11Group> a;
    a.domain = PathDomain::interval;
    int n = 2048;
    a.samples.reserve(n);
    for (int k = 0; k < n; ++k) {
        double t = double(k) / (n - 1);
        a.samples.push_back(g1 * std::sin(3.0 * t) + g2 * std::cos(2.0 * t));
    }
    for (int it = 0; it < 30; ++it) {
        double t0 = urand(0.0, 0.4), t2 = urand(0.6, 1.0), t1 = urand(t0, t2);
        MoebiusMap whole = integrate_transport(a, t0, t2);
        MoebiusMap split = integrate_transport(a, t1, t2) * integrate_transport(a, t0, t1);
        CHECK(distance(whole, split) < 1e-10);
    }
    // node-aligned split is exactly the same product
    MoebiusMap whole = integrate_transport(a, 0.0, 1.0);
    MoebiusMap split = integrate_transport(a, 1024.0 / 2047.0, 1.0) *
                       integrate_transport(a, 0.0, 1024.0 / 2047.0);
    CHECK(distance(whole, split) < 1e-13);
}

TEST_CASE("integrate_transport: second-order accuracy under sample refinement") {
    int good = 0;
    for (int c = 0; c < 5; ++c) {
        LieElement g1 = random_elem(0.7), g2 = random_elem(0.7);
        // Phi_t = exp(f(t) g1) exp(h(t) g2): a_t = f' g1 + h' Ad_{exp(f g1)} g2
        auto f = [c](double t) { return std::sin(1.3 * t + 0.2 * c); };
        auto fp = [c](double t) { return 1.3 * std::cos(1.3 * t + 0.2 * c); };
        auto h = [](double t) { return t * t; };
        auto hp = [](double t) { return 2.0 * t; };
        auto exact = [&](double t) { return exp_lie(g1, f(t) - f(0.0)) * exp_lie(g2, h(t)); };
        auto sample = [&](int n) {
            PathConnection<SU11Group> a;
            a.domain = PathDomain::interval;
            for (int k = 0; k < n; ++k) {
                double t = double(k) / (n - 1);
                LieElement ad = adjoint(exp_lie(g1, f(t) - f(0.0)), g2);
                a.samples.push_back(g1 * fp(t) + ad * hp(t));
            }
            return a;
        };
        MoebiusMap truth = exact(1.0) * exact(0.0).inverse();
        double e1 = distance(integrate_transport(sample(128), 0.0, 1.0), truth);
        double e2 = distance(integrate_transport(sample(256), 0.0, 1.0), truth);
        double ratio = e1 / e2;
        if (ratio > 3.0 && ratio < 5.0) ++good;
    }
    CHECK(good >= 4);
}

TEST_CASE("gauge_transform: pointwise conjugation for constant gauge") {
    LieElement g = random_elem();
    auto a = make_profiled_connection<SU11Group>(g, [](double t) { return 1.0 + t; }, 128);
    MoebiusMap k = exp_lie(random_elem(), 1.0);
    GaugePath<SU11Group> phi;
    phi.domain = PathDomain::interval;
    phi.samples.assign(128, k);
    auto b = gauge_transform(phi, a);
    for (int j = 0; j < 128; ++j) {
        LieElement expect = adjoint(k, a.samples[j]);
        CHECK(norm(b.samples[j] - expect) < 1e-10);
    }
}

TEST_CASE("gauge_transform: inverse transport path trivializes, N = 2048") {
    LieElement g1 = random_elem(0.6), g2 = random_elem(0.6);
    int n = 2048;
    PathConnection<SU11Group> a;
    a.domain = PathDomain::interval;
    for (int k = 0; k < n; ++k) {
        double t = double(k) / (n - 1);
        a.samples.push_back(g1 * std::cos(2.0 * t) + g2 * (0.5 + t));
    }
    auto path = transport_path(a);
    GaugePath<SU11Group> inv;
    inv.domain = PathDomain::interval;
    for (auto& p : path.samples) inv.samples.push_back(p.inverse());
    auto b = gauge_transform(inv, a);
    double worst = 0.0;
    for (auto& s : b.samples) worst = std::max(worst, norm(s));
    CHECK(worst < 1e-6);
}

TEST_CASE("holonomy: constant hyperbolic connection has rotation number 0") {
    auto a = make_constant_connection<SU11Group>({0.0, 1.0}, 256, PathDomain::circle);
    auto h = holonomy(a);
    CHECK(h.rotation_number == 0);
    CHECK(distance(h.element(), exp_lie({0.0, 1.0}, 1.0)) < 1e-8);
}

TEST_CASE("holonomy: manufactured rot-1 loop") {
    double tau = 3.0;
    auto a = make_rot1_loop(tau, 2048);
    auto h = holonomy(a);
    CHECK(h.rotation_number == 1);
    CHECK(std::abs(std::abs(h.element().trace()) - tau) < 1e-5);
    double beta0 = std::acosh(tau / 2.0);
    CHECK(distance(h.element(), exp_lie({0.0, beta0}, 1.0)) < 1e-5);

    // reversed orientation negates the rotation number
    auto rev = holonomy(reverse_connection(a));
    CHECK(rev.rotation_number == -1);

    // lift trace is continuous and closes up to 2 pi rot at the tracked point
    CHECK(std::abs(h.lift_trace.back() - h.lift_trace.front() -
                   kTwoPi * h.rotation_number) < 1e-6);
}

TEST_CASE("holonomy: gauge covariance under loop gauges, N = 2048") {
    // gentle wiggle on top of a constant hyperbolic connection
    int n = 2048;
    PathConnection<SU11Group> a;
    a.domain = PathDomain::circle;
    for (int j = 0; j < n; ++j) {
        double t = double(j) / n;
        a.samples.push_back(LieElement{0.0, 1.1} + random_elem(0.0) +
                            LieElement{0.15 * std::sin(kTwoPi * t), 0.1 * std::cos(kTwoPi * t)});
    }
    MoebiusMap k = exp_lie(random_elem(0.7), 1.0);
    auto phi = make_loop_gauge(k, random_elem(0.12), random_elem(0.12), n);
    auto b = gauge_transform(phi, a);
    MoebiusMap lhs = integrate_transport(b, 0.0, 1.0, 4);
    MoebiusMap rhs = phi.samples[0] * integrate_transport(a, 0.0, 1.0, 4) *
                     phi.samples[0].inverse();
    CHECK(distance(lhs, rhs) < 1e-6);
}

TEST_CASE("holonomy: non-hyperbolic loops are rejected") {
    auto a = make_constant_connection<SU11Group>({0.3, 0.0}, 128, PathDomain::circle);
    CHECK_THROWS(holonomy(a));
}

TEST_CASE("lifted_shift: fixed points, deck equivariance, trichotomy") {
    for (double tau : {2.1, 3.0, 10.0}) {
        auto h = holonomy(make_rot1_loop(tau, 512));
        auto fp = fixed_points(h.element());
        for (double lift_offset : {0.0, kTwoPi, -2.0 * kTwoPi}) {
            double ls = fp.l_small.angle + lift_offset;
            CHECK(std::abs(lifted_shift(h, ls) - kTwoPi * h.rotation_number) < 1e-8);
        }
        CHECK(lifted_shift(h, 1.3 + kTwoPi) == doctest::Approx(lifted_shift(h, 1.3)).epsilon(1e-12));

        double ts = fp.l_small.angle, tb = fp.l_big.angle;
        double arc = normalize_angle(tb - ts);
        int checked = 0;
        for (int it = 0; it < 1000; ++it) {
            double l = urand(-20.0, 20.0);
            double u = normalize_angle(l - ts);
            if (u < 1e-3 || std::abs(u - arc) < 1e-3 || u > kTwoPi - 1e-3) continue;
            double band = lifted_shift(h, l) - kTwoPi * h.rotation_number;
            if (u < arc) {
                CHECK(band > 0.0);
                CHECK(band < kTwoPi);
            } else {
                CHECK(band < 0.0);
                CHECK(band > -kTwoPi);
            }
            ++checked;
        }
        CHECK(checked > 800);
    }
}

TEST_CASE("affine transport matches closed forms") {
    AffLieElement g{std::log(2.0), std::log(2.0)};
    auto a = make_constant_connection<AffGroup>(g, 128);
    AffMap t = integrate_transport(a, 0.0, 1.0);
    CHECK(t.scale == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(t.shift == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("rotation number: conjugation invariance and loop additivity") {
    auto a = make_rot1_loop(3.0, 1024);
    auto h = holonomy(a);

    // constant-gauge conjugation preserves the rotation number
    MoebiusMap k = exp_lie(random_elem(0.6), 1.0);
    auto conj = a;
    for (auto& s : conj.samples) s = adjoint(k, s);
    CHECK(holonomy(conj).rotation_number == h.rotation_number);

    // traversing the loop twice doubles it (matched fixed points)
    PathConnection<SU11Group> twice;
    twice.domain = PathDomain::circle;
    int n = a.node_count();
    twice.samples.resize(2 * n);
    for (int j = 0; j < 2 * n; ++j) twice.samples[j] = a.samples[j % n] * 2.0;
    auto h2 = holonomy(twice);
    CHECK(h2.rotation_number == 2 * h.rotation_number);
    CHECK(distance(h2.element(), h.element() * h.element()) < 1e-4);
}

TEST_CASE("transport Richardson error estimate scales at second order") {
    LieElement g1 = random_elem(0.8), g2 = random_elem(0.8);
    auto sample = [&](int n) {
        PathConnection<SU11Group> a;
        a.domain = PathDomain::interval;
        for (int k = 0; k < n; ++k) {
            double t = double(k) / (n - 1);
            a.samples.push_back(g1 * std::sin(3.0 * t) + g2 * std::cos(2.0 * t));
        }
        return a;
    };
    // distance between the coarse and substep-refined products estimates the error
    auto est = [&](int n) {
        return distance(integrate_transport(sample(n), 0.0, 1.0, 1),
                        integrate_transport(sample(n), 0.0, 1.0, 2));
    };
    double e1 = est(128), e2 = est(256);
    CHECK(e1 / e2 > 3.0);
    CHECK(e1 / e2 < 5.5);
}

TEST_CASE("batch transport is safe to run concurrently") {
    std::vector<PathConnection<SU11Group>> batch;
    for (int c = 0; c < 16; ++c)
        batch.push_back(make_profiled_connection<SU11Group>(
            random_elem(0.7), [c](double t) { return 1.0 + 0.1 * c * t; }, 128));
    std::vector<MoebiusMap> serial(batch.size()), parallel(batch.size());
    for (std::size_t k = 0; k < batch.size(); ++k)
        serial[k] = integrate_transport(batch[k], 0.0, 1.0);
    std::vector<std::thread> pool;
    for (int th = 0; th < 4; ++th)
        pool.emplace_back([&, th] {
            for (std::size_t k = th; k < batch.size(); k += 4)
                parallel[k] = integrate_transport(batch[k], 0.0, 1.0);
        });
    for (auto& t : pool) t.join();
    for (std::size_t k = 0; k < batch.size(); ++k)
        CHECK(distance(serial[k], parallel[k]) == 0.0);
}

TEST_CASE("gauge_transform rejects mismatched node counts and domains") {
    auto a = make_constant_connection<SU11Group>({0.1, 0.2}, 64);
    GaugePath<SU11Group> phi;
    phi.domain = PathDomain::interval;
    phi.samples.assign(32, MoebiusMap::identity());
    CHECK_THROWS_AS(gauge_transform(phi, a), std::invalid_argument);
    phi.samples.assign(64, MoebiusMap::identity());
    phi.domain = PathDomain::circle;
    CHECK_THROWS_AS(gauge_transform(phi, a), std::invalid_argument);
}
