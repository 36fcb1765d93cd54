#pragma once

#include "hypcr/cr/solver.hpp"

// Energies of grid maps for the twisted problem.
//
//   E^geom = int ||Du - X_A||^2         (half-norm convention: no extra 1/2)
//   E^top  = int v* omega_A  -  int_{boundary} v* beta_A
//
// Pointwise, v* omega_A(d_s, d_t) = omega(Y_s, Y_t) with Y = Du - X_A, which
// is what the quadrature sums; the boundary correction beta_A is
// (H_alpha - H_{A|boundary}) restricted to the germ bundle, with alpha any
// generator transporting the germs along the boundary (Hamiltonians in the
// flow-paired normalization, so the Stokes identity closes).

namespace hypcr {

struct EnergyReport {
    double geom = 0.0;
    double top = 0.0;
    double boundary_term = 0.0;
    std::string convention = "half-norm (no 1/2 factor in E)";
};

double energy_geom(const GridMap& u, const CRProblem& p);

EnergyReport energy_top(const GridMap& u, const CRProblem& p);

// Minimal-norm generator moving germ angular data with the given velocities:
// boundary speeds 2(alpha - im(conj(beta) e^{i theta})) = nu at both ideal
// endpoints of the germ's geodesic.
LieElement germ_transport_generator(const GeodesicGerm& germ, double nu_end, double nu_other);

// beta_A contracted with d/d(arc) at the germ point germ(sigma) over the arc
// position; a_along gives A(d/d(arc)).  The germ family is differentiated by
// centered differences with step fd_step.
double beta_form(const std::function<LieElement(double)>& a_along,
                 const std::function<GeodesicGerm(double)>& germs, double arc_pos,
                 double sigma, double fd_step = 1e-5);

}  // namespace hypcr
