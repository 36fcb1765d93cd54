#pragma once

#include <functional>
#include <optional>
#include <string>

#include "hypcr/affine.hpp"
#include "hypcr/cr/domain.hpp"
#include "hypcr/hamiltonian.hpp"

// Least-squares solver for the twisted Cauchy-Riemann boundary-value problem
//   (Du - X_A)^{0,1} = 0
// with vertical-line boundary values re(u) = lambda (half-plane model) or
// geodesic-germ boundary values u(z) in delta_z (disc model).  The residual is
// discretized on cells (box scheme, second order); boundary nodes carry one
// real unknown (the height on the line, or arclength along the germ), interior
// nodes two.  Gauss-Newton with Levenberg damping; escape from the model
// domain is detected, clamped and reported as an outcome rather than an error.

namespace hypcr {

enum class EndMode { free_ends, dirichlet_ends, boundary_ends };

enum class SolveOutcome { converged_interior, escape, plateau };

std::string to_string(SolveOutcome o);

struct SolveOptions {
    int max_iterations = 200;
    double tol_rms = 1e-10;       // converged when the residual rms drops below
    double clamp_factor = 10.0;   // escape threshold scale: |w| > 1 - clamp_factor*h
    double im_floor_scale = 0.1;  // half-plane: im(w) < clamp_factor*h*scale flags escape
    int stall_window = 12;        // plateau detection: no 0.1% progress over this many steps
};

struct CRProblem {
    DomainSpec domain;
    Model model = Model::half_plane;

    // connection components a_s, a_t as functions of the parameter point;
    // unset means A = 0.  Polar shapes require A = 0.
    std::function<LieElement(double, double)> su_s, su_t;
    std::function<AffLieElement(double, double)> aff_s, aff_t;

    // boundary data, evaluated at boundary-node coordinates (a, b)
    std::function<double(double, double)> line_lambda;      // half-plane model
    std::function<GeodesicGerm(double, double)> germ;       // disc model

    EndMode ends = EndMode::dirichlet_ends;                 // rectangle only
    std::function<cplx(double, double)> end_values;         // dirichlet data

    std::function<cplx(double, double)> initial_guess;      // required

    SolveOptions options;
};

struct SolveReport {
    SolveOutcome outcome = SolveOutcome::plateau;
    double residual_rms = 0.0;
    int iterations = 0;
    bool stayed_inside = true;  // no clamping happened during the iteration
    int clamped_nodes = 0;      // active clamps at the final iterate
};

struct SolveResult {
    GridMap u;
    SolveReport report;
};

SolveResult solve_cr(const CRProblem& problem);

// Residual rms of a given grid map for the problem (diagnostic / testing).
double cr_residual_rms(const GridMap& u, const CRProblem& problem);

}  // namespace hypcr
