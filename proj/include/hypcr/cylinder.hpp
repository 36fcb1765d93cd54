#pragma once

#include <cstdint>

#include "hypcr/cr/solver.hpp"

// The cylinder-length bound L(tau) = pi (2 log(tau/2 + sqrt(tau^2/4 - 1)))^{-1}
// and the multi-seed feasibility experiment for the twisted equation
//   d_s u + i (d_t u - X_{a_t}) = 0   on (0, l) x S^1
// with a_t drawn from the rotation-number-1 family of trace tau.

namespace hypcr {

double cylinder_bound(double tau);  // tau > 2

struct CylinderExperimentReport {
    double tau = 0.0;
    double length = 0.0;
    double bound = 0.0;  // L(tau)
    std::vector<SolveOutcome> outcomes;
    std::vector<double> residuals;
    int converged_interior = 0;
    int escapes = 0;
    int plateaus = 0;
};

CylinderExperimentReport cylinder_feasibility_experiment(double tau, double length,
                                                         int n_seeds,
                                                         std::uint64_t seed0 = 0,
                                                         int ns = 24, int nt = 48);

}  // namespace hypcr
