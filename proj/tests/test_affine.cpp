#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hypcr/affine.hpp"

using namespace hypcr;

namespace {
std::mt19937_64 rng(7);
double urand(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}
AffMap random_aff() { return AffMap(std::exp(urand(-1.5, 1.5)), urand(-3.0, 3.0)); }
}  // namespace

TEST_CASE("affine group laws") {
    for (int it = 0; it < 10000; ++it) {
        AffMap g = random_aff(), h = random_aff(), k = random_aff();
        CHECK(distance((g * h) * k, g * (h * k)) < 1e-12);
        CHECK(distance(g * g.inverse(), AffMap::identity()) < 1e-12);
        CHECK(distance((g * h).inverse(), h.inverse() * g.inverse()) < 1e-12);
        double x = urand(-5.0, 5.0);
        CHECK((g * h)(x) == doctest::Approx(g(h(x))).epsilon(1e-12));
    }
    CHECK_THROWS_AS(AffMap(-1.0, 0.0), std::invalid_argument);
}

TEST_CASE("aff exp/log closed forms") {
    AffMap g = aff_exp({std::log(2.0), std::log(2.0)}, 1.0);
    CHECK(g.scale == doctest::Approx(2.0));
    CHECK(g.shift == doctest::Approx(1.0));  // (e^s - 1) tau / s with s = tau = log 2

    for (int it = 0; it < 500; ++it) {
        AffLieElement gamma{urand(-1.0, 1.0), urand(-2.0, 2.0)};
        double t = urand(-2.0, 2.0), s = urand(-2.0, 2.0);
        CHECK(distance(aff_exp(gamma, t + s), aff_exp(gamma, t) * aff_exp(gamma, s)) < 1e-11);
        AffLieElement back = aff_log(aff_exp(gamma, 1.0));
        CHECK(norm(back - gamma) < 1e-11);
    }
    // pure shift generator
    AffMap sh = aff_exp({0.0, 1.5}, 2.0);
    CHECK(sh.scale == doctest::Approx(1.0));
    CHECK(sh.shift == doctest::Approx(3.0));
}

TEST_CASE("aff bracket is bilinear, antisymmetric") {
    for (int it = 0; it < 200; ++it) {
        AffLieElement x{urand(-1, 1), urand(-1, 1)}, y{urand(-1, 1), urand(-1, 1)};
        AffLieElement s = aff_bracket(x, y) + aff_bracket(y, x);
        CHECK(norm(s) < 1e-15);
        AffLieElement lin = aff_bracket(x + x, y) - aff_bracket(x, y) * 2.0;
        CHECK(norm(lin) < 1e-13);
    }
}

TEST_CASE("hamiltonian_halfplane values") {
    cplx w(0.7, 1.3);
    CHECK(hamiltonian_halfplane({0.0, 1.0}, w) == doctest::Approx(1.0 / 1.3));
    CHECK(hamiltonian_halfplane({1.0, 0.0}, w) == doctest::Approx(0.7 / 1.3));
    CHECK(hamiltonian_halfplane({0.0, 0.0}, w) == 0.0);
    CHECK_THROWS_AS(hamiltonian_halfplane({1.0, 0.0}, cplx(0.0, -1.0)), std::domain_error);
}

TEST_CASE("affine Poisson homomorphism") {
    double worst = 0.0;
    for (int it = 0; it < 1000; ++it) {
        AffLieElement g1{urand(-1, 1), urand(-1, 1)}, g2{urand(-1, 1), urand(-1, 1)};
        cplx w(urand(-3, 3), urand(0.2, 3.0));
        worst = std::max(worst, poisson_residual_halfplane(g1, g2, w));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("halfplane field pairs with H via i_X omega = -dH") {
    for (int it = 0; it < 400; ++it) {
        AffLieElement g{urand(-1, 1), urand(-1, 1)};
        cplx w(urand(-3, 3), urand(0.2, 3.0));
        double hx, hy;
        hamiltonian_halfplane_grad(g, w, hx, hy);
        cplx x = vector_field_halfplane(g, w);
        double lam = 1.0 / (w.imag() * w.imag());
        CHECK(std::abs(lam * x.imag() - hx) < 1e-12);
        CHECK(std::abs(lam * x.real() + hy) < 1e-12);
    }
}
