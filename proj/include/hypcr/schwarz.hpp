#pragma once

#include <functional>
#include <vector>

#include "hypcr/cr/domain.hpp"

// Schwarz integral  u(z) = (i/pi) int gamma(zeta) / (z - zeta) d zeta  for
// boundary data gamma of compact support, evaluated by adaptive
// Gauss-Kronrod quadrature; and the Schwarz-Pick ratio check
// ||Du||_W (1-|z|^2)/2 <= 1 for half-plane-valued maps on disc grids.

namespace hypcr {

// Piecewise-linear sampled function on [lo, hi], zero outside.
struct SampledFunction {
    double lo = 0.0, hi = 1.0;
    std::vector<double> values;

    double operator()(double x) const;
};

// Adaptive Gauss-Kronrod 7-15 on [a, b]; throws on non-convergence.
cplx integrate_gk(const std::function<cplx(double)>& f, double a, double b,
                  double tol = 1e-12, int max_depth = 48);

cplx schwarz_integral(const std::function<double(double)>& gamma, double support_lo,
                      double support_hi, cplx z, double tol = 1e-12);

cplx schwarz_integral(const SampledFunction& gamma, cplx z, double tol = 1e-12);

// max over interior grid nodes of ||Du||_W (1-|z|^2)/2 (disc / half-disc grids,
// half-plane model values).
double schwarz_pick_check(const GridMap& u);

// Pointwise ratio from closed-form derivative data.
double schwarz_pick_ratio(cplx z, cplx du_dz, cplx du_dzbar, cplx u);

}  // namespace hypcr
