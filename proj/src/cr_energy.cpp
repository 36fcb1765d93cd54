#include "hypcr/cr/energy.hpp"

#include <cmath>

namespace hypcr {

namespace {

double conf_factor(Model m, cplx w) {
    if (m == Model::disc) return 1.0 - std::norm(w);
    return w.imag();
}

struct CellTwist {
    cplx y1, y2;  // twisted differentials in the two cell directions
    cplx uc;
};

CellTwist cell_twist(const GridCell& cell, const std::vector<cplx>& u, const CRProblem& p) {
    CellTwist out;
    cplx d1(0.0), d2(0.0), uc(0.0);
    for (int k = 0; k < 4; ++k) {
        cplx uk = u[cell.id[k]];
        d1 += cell.c1[k] * uk;
        d2 += cell.c2[k] * uk;
        uc += cell.av[k] * uk;
    }
    cplx x1(0.0), x2(0.0);
    if (p.model == Model::disc) {
        if (p.su_t) x1 = vector_field_disc(p.su_t(cell.pa, cell.pb), uc);
        if (p.su_s) x2 = vector_field_disc(p.su_s(cell.pa, cell.pb), uc);
    } else {
        if (p.aff_t) x1 = vector_field_halfplane(p.aff_t(cell.pa, cell.pb), uc);
        if (p.aff_s) x2 = vector_field_halfplane(p.aff_s(cell.pa, cell.pb), uc);
    }
    out.y1 = d1 - x1;
    out.y2 = d2 - x2 * cell.metric_r;
    out.uc = uc;
    return out;
}

double edge_beta(const BoundaryEdge& e, const Grid& grid, const std::vector<cplx>& u,
                 const CRProblem& p) {
    const GridNode& n0 = grid.nodes[e.n0];
    const GridNode& n1 = grid.nodes[e.n1];
    cplx umid = 0.5 * (u[e.n0] + u[e.n1]);
    if (p.model == Model::half_plane) return 0.0;  // vertical lines are isotropic
    GeodesicGerm g0 = p.germ(n0.a, n0.b);
    GeodesicGerm g1 = p.germ(n1.a, n1.b);
    GeodesicGerm gm = p.germ(0.5 * (n0.a + n1.a), 0.5 * (n0.b + n1.b));
    double pe = std::remainder(g1.endpoint.angle - g0.endpoint.angle, kTwoPi);
    double po = std::remainder(germ_other_endpoint(g1).angle - germ_other_endpoint(g0).angle,
                               kTwoPi);
    LieElement alpha = germ_transport_generator(gm, pe, po);  // total motion over the edge
    double h_alpha = flow_hamiltonian_disc(alpha, umid);
    double h_conn = 0.0;
    if (p.su_s) h_conn += flow_hamiltonian_disc(p.su_s(0.5 * (n0.a + n1.a),
                                                       0.5 * (n0.b + n1.b)),
                                                umid) *
                          (n1.a - n0.a);
    if (p.su_t) h_conn += flow_hamiltonian_disc(p.su_t(0.5 * (n0.a + n1.a),
                                                       0.5 * (n0.b + n1.b)),
                                                umid) *
                          (n1.b - n0.b);
    return h_alpha - h_conn;
}

}  // namespace

double energy_geom(const GridMap& u, const CRProblem& p) {
    Grid grid = make_grid(p.domain);
    if (u.values.size() != grid.nodes.size())
        throw std::invalid_argument("energy_geom: grid size mismatch");
    double e = 0.0;
    for (const GridCell& cell : grid.cells) {
        CellTwist t = cell_twist(cell, u.values, p);
        double conf = conf_factor(p.model, t.uc);
        e += 0.5 * (std::norm(t.y1) + std::norm(t.y2)) / (conf * conf) * cell.wq;
    }
    return e;
}

EnergyReport energy_top(const GridMap& u, const CRProblem& p) {
    Grid grid = make_grid(p.domain);
    if (u.values.size() != grid.nodes.size())
        throw std::invalid_argument("energy_top: grid size mismatch");
    EnergyReport rep;
    double omega_int = 0.0;
    for (const GridCell& cell : grid.cells) {
        CellTwist t = cell_twist(cell, u.values, p);
        double conf = conf_factor(p.model, t.uc);
        omega_int += std::imag(std::conj(t.y2) * t.y1) / (conf * conf) * cell.wq;
    }
    double boundary = 0.0;
    for (const BoundaryEdge& e : grid.boundary_edges) {
        bool is_end_arc = e.arc == 2 || e.arc == 3;
        if (is_end_arc && p.ends != EndMode::boundary_ends) continue;
        boundary += edge_beta(e, grid, u.values, p);
    }
    rep.boundary_term = boundary;
    rep.top = omega_int - boundary;
    rep.geom = energy_geom(u, p);
    return rep;
}

LieElement germ_transport_generator(const GeodesicGerm& germ, double nu_end, double nu_other) {
    double te = germ.endpoint.angle;
    double to = germ_other_endpoint(germ).angle;
    // rows 2a - 2 sin(t) p + 2 cos(t) q = nu at t in {te, to}; minimal-norm solution
    double c = std::cos(te - to);
    double a11 = 8.0, a12 = 4.0 + 4.0 * c, a22 = 8.0;
    double det = a11 * a22 - a12 * a12;
    if (std::abs(det) < 1e-12)
        throw std::invalid_argument("germ_transport_generator: degenerate geodesic");
    double y1 = (a22 * nu_end - a12 * nu_other) / det;
    double y2 = (-a12 * nu_end + a11 * nu_other) / det;
    double alpha = 2.0 * (y1 + y2);
    double pcoef = -2.0 * (std::sin(te) * y1 + std::sin(to) * y2);
    double qcoef = 2.0 * (std::cos(te) * y1 + std::cos(to) * y2);
    return {alpha, cplx(pcoef, qcoef)};
}

double beta_form(const std::function<LieElement(double)>& a_along,
                 const std::function<GeodesicGerm(double)>& germs, double arc_pos,
                 double sigma, double fd_step) {
    GeodesicGerm g0 = germs(arc_pos);
    GeodesicGerm gp = germs(arc_pos + fd_step);
    GeodesicGerm gm = germs(arc_pos - fd_step);
    double nu_end =
        std::remainder(gp.endpoint.angle - gm.endpoint.angle, kTwoPi) / (2.0 * fd_step);
    double nu_other = std::remainder(germ_other_endpoint(gp).angle -
                                         germ_other_endpoint(gm).angle,
                                     kTwoPi) /
                      (2.0 * fd_step);
    LieElement alpha = germ_transport_generator(g0, nu_end, nu_other);
    cplx w = germ_point(g0, sigma);
    double value = flow_hamiltonian_disc(alpha, w);
    if (a_along) value -= flow_hamiltonian_disc(a_along(arc_pos), w);
    return value;
}

}  // namespace hypcr
