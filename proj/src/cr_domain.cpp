#include "hypcr/cr/domain.hpp"

#include <cmath>

namespace hypcr {

int Grid::node_index(int i, int j) const {
    switch (dom.shape) {
        case Shape::rectangle:
            return i + (dom.ns + 1) * j;
        case Shape::cylinder:
            return i + (dom.ns + 1) * (((j % dom.nt) + dom.nt) % dom.nt);
        case Shape::disc:
            if (i == 0) return 0;
            return 1 + (i - 1) * dom.nt + ((j % dom.nt + dom.nt) % dom.nt);
        case Shape::half_disc:
            if (i == 0) return 0;
            return 1 + (i - 1) * (dom.nt + 1) + j;
    }
    return -1;
}

namespace {

void quad_cell_ops(GridCell& c, double h1, double h2) {
    // corners ordered (i,j), (i+1,j), (i,j+1), (i+1,j+1); axis 1 is j, axis 2 is i
    const double d1[4] = {-1, -1, 1, 1};
    const double d2[4] = {-1, 1, -1, 1};
    for (int k = 0; k < 4; ++k) {
        c.c1[k] = d1[k] / (2.0 * h1);
        c.c2[k] = d2[k] / (2.0 * h2);
        c.av[k] = 0.25;
    }
}

Grid make_rectangle(const DomainSpec& dom, bool cyclic) {
    Grid g;
    g.dom = dom;
    double hs = dom.length_s / dom.ns;
    double ht = 1.0 / dom.nt;
    int rows = cyclic ? dom.nt : dom.nt + 1;
    g.nodes.resize(std::size_t(dom.ns + 1) * rows);
    for (int j = 0; j < rows; ++j) {
        for (int i = 0; i <= dom.ns; ++i) {
            GridNode n;
            n.a = i * hs;
            n.b = j * ht;
            n.z = cplx(n.a, n.b);
            if (!cyclic && (j == 0 || j == dom.nt)) {
                n.kind = NodeKind::side_boundary;
                n.arc = j == 0 ? 0 : 1;
            } else if (i == 0 || i == dom.ns) {
                n.kind = NodeKind::end;
                n.arc = i == 0 ? 2 : 3;
            }
            g.nodes[g.node_index(i, j)] = n;
        }
    }
    for (int j = 0; j < dom.nt; ++j) {
        for (int i = 0; i < dom.ns; ++i) {
            GridCell c;
            c.id[0] = g.node_index(i, j);
            c.id[1] = g.node_index(i + 1, j);
            c.id[2] = g.node_index(i, j + 1);
            c.id[3] = g.node_index(i + 1, j + 1);
            quad_cell_ops(c, ht, hs);
            c.pa = (i + 0.5) * hs;
            c.pb = (j + 0.5) * ht;
            c.wq = hs * ht;
            g.cells.push_back(c);
        }
    }
    if (!cyclic) {
        // counterclockwise: bottom left->right, right up, top right->left, left down
        for (int i = 0; i < dom.ns; ++i)
            g.boundary_edges.push_back({g.node_index(i, 0), g.node_index(i + 1, 0), hs, 0});
        for (int j = 0; j < dom.nt; ++j)
            g.boundary_edges.push_back(
                {g.node_index(dom.ns, j), g.node_index(dom.ns, j + 1), ht, 3});
        for (int i = dom.ns; i > 0; --i)
            g.boundary_edges.push_back(
                {g.node_index(i, dom.nt), g.node_index(i - 1, dom.nt), hs, 1});
        for (int j = dom.nt; j > 0; --j)
            g.boundary_edges.push_back({g.node_index(0, j), g.node_index(0, j - 1), ht, 2});
    }
    return g;
}

Grid make_polar(const DomainSpec& dom, bool half) {
    Grid g;
    g.dom = dom;
    int nr = dom.ns;
    int na = dom.nt;  // angular cells
    double hr = 1.0 / nr;
    double th0 = half ? -kPi / 2.0 : 0.0;
    double ha = (half ? kPi : kTwoPi) / na;
    int ring_nodes = half ? na + 1 : na;
    g.nodes.resize(std::size_t(1) + std::size_t(nr) * ring_nodes);
    {
        GridNode c;
        c.a = 0.0;
        c.b = th0;
        c.z = 0.0;
        if (half) {
            c.kind = NodeKind::side_boundary;  // the centre lies on the diameter
            c.arc = 0;
        }
        g.nodes[0] = c;
    }
    for (int i = 1; i <= nr; ++i) {
        for (int j = 0; j < ring_nodes; ++j) {
            GridNode n;
            n.a = i * hr;
            n.b = th0 + j * ha;
            n.z = std::polar(n.a, n.b);
            if (half && (j == 0 || j == na)) {
                n.kind = NodeKind::side_boundary;
                n.arc = 0;
            }
            g.nodes[g.node_index(i, j)] = n;
        }
    }
    // centre wedges: the theta-derivative lives on the first ring, so the
    // radial factor is the ring radius (keeps the wedge O(h^2)-consistent)
    for (int j = 0; j < na; ++j) {
        GridCell c;
        int j1 = half ? j + 1 : (j + 1) % na;
        c.id[0] = 0;
        c.id[1] = 0;
        c.id[2] = g.node_index(1, j);
        c.id[3] = g.node_index(1, j1);
        double rc = hr;
        c.c1[2] = -1.0 / ha;
        c.c1[3] = 1.0 / ha;
        c.c2[0] = c.c2[1] = -0.5 * rc / hr;
        c.c2[2] = c.c2[3] = 0.5 * rc / hr;
        c.av[0] = c.av[1] = 0.25;
        c.av[2] = c.av[3] = 0.25;
        c.pa = rc;
        c.pb = th0 + (j + 0.5) * ha;
        c.metric_r = rc;
        c.wq = hr * ha / rc;
        g.cells.push_back(c);
    }
    // annular cells
    for (int i = 1; i < nr; ++i) {
        for (int j = 0; j < na; ++j) {
            GridCell c;
            int j1 = half ? j + 1 : (j + 1) % na;
            c.id[0] = g.node_index(i, j);
            c.id[1] = g.node_index(i + 1, j);
            c.id[2] = g.node_index(i, j1);
            c.id[3] = g.node_index(i + 1, j1);
            double rc = (i + 0.5) * hr;
            const double d1[4] = {-1, -1, 1, 1};
            const double d2[4] = {-1, 1, -1, 1};
            for (int k = 0; k < 4; ++k) {
                c.c1[k] = d1[k] / (2.0 * ha);
                c.c2[k] = rc * d2[k] / (2.0 * hr);
                c.av[k] = 0.25;
            }
            c.pa = rc;
            c.pb = th0 + (j + 0.5) * ha;
            c.metric_r = rc;
            c.wq = hr * ha / rc;
            g.cells.push_back(c);
        }
    }
    if (half) {
        // counterclockwise: down the theta = -pi/2 radius to the centre, then
        // out along theta = +pi/2
        for (int i = nr; i > 1; --i)
            g.boundary_edges.push_back({g.node_index(i, 0), g.node_index(i - 1, 0), hr, 0});
        g.boundary_edges.push_back({g.node_index(1, 0), 0, hr, 0});
        g.boundary_edges.push_back({0, g.node_index(1, na), hr, 0});
        for (int i = 1; i < nr; ++i)
            g.boundary_edges.push_back(
                {g.node_index(i, na), g.node_index(i + 1, na), hr, 0});
    }
    return g;
}

}  // namespace

Grid make_grid(const DomainSpec& dom) {
    dom.validate();
    switch (dom.shape) {
        case Shape::rectangle: return make_rectangle(dom, false);
        case Shape::cylinder: return make_rectangle(dom, true);
        case Shape::disc: return make_polar(dom, false);
        case Shape::half_disc: return make_polar(dom, true);
    }
    throw std::logic_error("make_grid: unknown shape");
}

}  // namespace hypcr
