#pragma once

#include <stdexcept>
#include <vector>

#include "hypcr/moebius.hpp"

// Discretized parameter domains for the boundary-value problems: rectangles
// [0,l] x [0,1], finite cylinders [0,l] x S^1, and polar grids on the unit
// disc / half-disc.  The Cauchy-Riemann residual lives on cells (box scheme);
// boundary edges are oriented counterclockwise for the Stokes bookkeeping.

namespace hypcr {

enum class Shape { rectangle, cylinder, disc, half_disc };
enum class Model { half_plane, disc };

struct DomainSpec {
    Shape shape = Shape::rectangle;
    int ns = 16;          // cells along s (radial cells for polar shapes)
    int nt = 16;          // cells along t (angular cells for polar shapes)
    double length_s = 1.0;

    void validate() const {
        if (ns < 8 || nt < 8) throw std::invalid_argument("DomainSpec: resolution >= (8,8)");
        if (!(length_s > 0.0)) throw std::invalid_argument("DomainSpec: length must be positive");
    }
};

enum class NodeKind { interior, side_boundary, end };

struct GridNode {
    double a = 0.0, b = 0.0;  // (s,t) or (r,theta)
    cplx z;                   // complex parameter point
    NodeKind kind = NodeKind::interior;
    int arc = -1;             // boundary arc id for side_boundary nodes
};

// One residual cell: D1 u = sum c1[k] u[id[k]] (the "t/theta" derivative),
// D2 u = sum c2[k] u[id[k]] (the "s / r d_r" derivative), uc = sum av[k] u.
// CR residual: (D1 u - X(a1)(uc)) - i (D2 u - X(a2)(uc)).
struct GridCell {
    int id[4] = {0, 0, 0, 0};
    double c1[4] = {0, 0, 0, 0};
    double c2[4] = {0, 0, 0, 0};
    double av[4] = {0, 0, 0, 0};
    double pa = 0.0, pb = 0.0;  // evaluation point of the connection
    double wq = 0.0;            // quadrature weight for energies
    double metric_r = 1.0;      // polar r at the cell (1 for rectangles)
};

struct BoundaryEdge {
    int n0 = 0, n1 = 0;  // oriented: n0 -> n1 is counterclockwise along the boundary
    double len = 0.0;    // parameter length of the edge
    int arc = 0;
};

struct Grid {
    DomainSpec dom;
    std::vector<GridNode> nodes;
    std::vector<GridCell> cells;
    std::vector<BoundaryEdge> boundary_edges;

    int node_index(int i, int j) const;  // shape-dependent layout
};

Grid make_grid(const DomainSpec& dom);

// Discretized map into the model space.
struct GridMap {
    DomainSpec domain;
    Model model = Model::half_plane;
    std::vector<cplx> values;  // one per grid node, make_grid order
};

}  // namespace hypcr
