#pragma once

#include <functional>
#include <vector>

#include "hypcr/connection.hpp"
#include "hypcr/hamiltonian.hpp"

// Gauge fields on 2D rectangular grids, the lattice connections they induce,
// and the plaquette-holonomy curvature defect.

namespace hypcr {

struct GaugeGrid {
    int ns = 0, nt = 0;  // node counts per axis
    double hs = 0.0, ht = 0.0;
    std::vector<MoebiusMap> nodes;  // row-major, index i + ns*j

    const MoebiusMap& at(int i, int j) const { return nodes[i + ns * j]; }
    MoebiusMap& at(int i, int j) { return nodes[i + ns * j]; }

    static GaugeGrid from_function(const std::function<MoebiusMap(double, double)>& phi,
                                   int ns, int nt, double len_s = 1.0, double len_t = 1.0);
};

// su(1,1)-valued components a_s, a_t sampled at grid nodes.
struct LatticeConnection {
    int ns = 0, nt = 0;
    double hs = 0.0, ht = 0.0;
    std::vector<LieElement> a_s, a_t;  // row-major

    const LieElement& as(int i, int j) const { return a_s[i + ns * j]; }
    const LieElement& at(int i, int j) const { return a_t[i + ns * j]; }

    static LatticeConnection constant(const LieElement& g1, const LieElement& g2, int ns,
                                      int nt, double len_s = 1.0, double len_t = 1.0);
};

// A = (dPhi) Phi^{-1} by centered log-differences (second-order one-sided at
// the grid edges).
LatticeConnection induced_lattice_connection(const GaugeGrid& phi);

// max over plaquettes of distance(plaquette product, identity) / (hs*ht).
// Links are exponentials of edge-averaged node samples.
double plaquette_curvature(const LatticeConnection& a);
double plaquette_curvature(const GaugeGrid& phi);

// Residual of the flatness identity in Hamiltonian form,
//   d_t H_A(d_s) - d_s H_A(d_t) + {H_A(d_s), H_A(d_t)},
// maximized over interior grid nodes at the given fibre points.
double flatness_hamiltonian_residual(const LatticeConnection& a,
                                     const std::vector<cplx>& fibre_points);

}  // namespace hypcr
