#include "hypcr/affine.hpp"

#include <cmath>

namespace hypcr {

AffMap aff_exp(const AffLieElement& gamma, double t) {
    double s = gamma.scale_rate * t;
    double scale = std::exp(s);
    double shift;
    if (std::abs(s) < 1e-8) {
        shift = gamma.shift_rate * t * (1.0 + s / 2.0 + s * s / 6.0);
    } else {
        shift = (scale - 1.0) * gamma.shift_rate / gamma.scale_rate;
    }
    return AffMap(scale, shift);
}

AffLieElement aff_log(const AffMap& g) {
    double s = std::log(g.scale);
    double tau;
    if (std::abs(s) < 1e-8) {
        tau = g.shift / (1.0 + s / 2.0 + s * s / 6.0);
    } else {
        tau = g.shift * s / (g.scale - 1.0);
    }
    return {s, tau};
}

double hamiltonian_halfplane(const AffLieElement& gamma, cplx w) {
    if (!(w.imag() > 0.0))
        throw std::domain_error("hamiltonian_halfplane: im(w) > 0 required");
    return (gamma.scale_rate * w.real() + gamma.shift_rate) / w.imag();
}

void hamiltonian_halfplane_grad(const AffLieElement& gamma, cplx w, double& hx, double& hy) {
    double x = w.real(), y = w.imag();
    hx = gamma.scale_rate / y;
    hy = -(gamma.scale_rate * x + gamma.shift_rate) / (y * y);
}

double poisson_bracket_halfplane(const AffLieElement& g1, const AffLieElement& g2, cplx w) {
    double h1x, h1y, h2x, h2y;
    hamiltonian_halfplane_grad(g1, w, h1x, h1y);
    hamiltonian_halfplane_grad(g2, w, h2x, h2y);
    double y = w.imag();
    return y * y * (h1x * h2y - h1y * h2x);
}

double poisson_residual_halfplane(const AffLieElement& g1, const AffLieElement& g2, cplx w) {
    double lhs = poisson_bracket_halfplane(g1, g2, w);
    double rhs = hamiltonian_halfplane(aff_bracket(g1, g2), w);
    return std::abs(lhs - rhs);
}

}  // namespace hypcr
