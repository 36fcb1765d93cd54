#include "hypcr/hamiltonian.hpp"

#include <cmath>

namespace hypcr {

double hamiltonian_disc(const LieElement& g, cplx w) {
    double r2 = std::norm(w);
    if (!(r2 < 1.0))
        throw std::domain_error("hamiltonian_disc: |w| < 1 required");
    return (0.5 * (1.0 + r2) * g.alpha - std::imag(g.beta * w)) / (1.0 - r2);
}

void hamiltonian_disc_grad(const LieElement& g, cplx w, double& hx, double& hy) {
    double x = w.real(), y = w.imag();
    double r2 = x * x + y * y;
    double D = 1.0 - r2;
    double p = g.beta.real(), q = g.beta.imag();
    double N = 0.5 * g.alpha * (1.0 + r2) - (p * y + q * x);
    double Nx = g.alpha * x - q;
    double Ny = g.alpha * y - p;
    hx = (Nx * D + 2.0 * x * N) / (D * D);
    hy = (Ny * D + 2.0 * y * N) / (D * D);
}

double poisson_bracket_disc(const LieElement& g1, const LieElement& g2, cplx w) {
    double h1x, h1y, h2x, h2y;
    hamiltonian_disc_grad(g1, w, h1x, h1y);
    hamiltonian_disc_grad(g2, w, h2x, h2y);
    double D = 1.0 - std::norm(w);
    return D * D * (h1x * h2y - h1y * h2x);
}

double poisson_residual(const LieElement& g1, const LieElement& g2, cplx w) {
    double lhs = poisson_bracket_disc(g1, g2, w);
    double rhs = hamiltonian_disc(lie_bracket(g1, g2), w);
    return std::abs(lhs - rhs);
}

}  // namespace hypcr
