#include "hypcr/cr/solver.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <cmath>

namespace hypcr {

std::string to_string(SolveOutcome o) {
    switch (o) {
        case SolveOutcome::converged_interior: return "converged-interior";
        case SolveOutcome::escape: return "escape";
        case SolveOutcome::plateau: return "plateau";
    }
    return "?";
}

namespace {

struct NodeDof {
    enum Kind { free2, line1, germ1, fixed0 } kind = free2;
    int offset = -1;           // first column in the unknown vector
    double lambda = 0.0;       // line data
    GeodesicGerm germ;         // germ data
};

struct Workspace {
    Grid grid;
    const CRProblem* p = nullptr;
    std::vector<NodeDof> dofs;
    std::vector<cplx> u;        // current values per node
    std::vector<double> q;      // 1-dof parameters (indexed by dof offset)
    int n_unknowns = 0;
    double hmin = 0.0;
    bool ever_clamped = false;

    cplx twist1(double pa, double pb, cplx w) const {  // X(a_t)
        if (p->model == Model::disc)
            return p->su_t ? vector_field_disc(p->su_t(pa, pb), w) : cplx(0.0);
        return p->aff_t ? vector_field_halfplane(p->aff_t(pa, pb), w) : cplx(0.0);
    }
    cplx twist2(double pa, double pb, cplx w) const {  // X(a_s)
        if (p->model == Model::disc)
            return p->su_s ? vector_field_disc(p->su_s(pa, pb), w) : cplx(0.0);
        return p->aff_s ? vector_field_halfplane(p->aff_s(pa, pb), w) : cplx(0.0);
    }
    cplx dtwist1(double pa, double pb, cplx w) const {  // dX/dw, holomorphic fields
        if (p->model == Model::disc) {
            if (!p->su_t) return 0.0;
            LieElement g = p->su_t(pa, pb);
            return -2.0 * std::conj(g.beta) * w + cplx(0.0, 2.0 * g.alpha);
        }
        return p->aff_t ? cplx(p->aff_t(pa, pb).scale_rate) : cplx(0.0);
    }
    cplx dtwist2(double pa, double pb, cplx w) const {
        if (p->model == Model::disc) {
            if (!p->su_s) return 0.0;
            LieElement g = p->su_s(pa, pb);
            return -2.0 * std::conj(g.beta) * w + cplx(0.0, 2.0 * g.alpha);
        }
        return p->aff_s ? cplx(p->aff_s(pa, pb).scale_rate) : cplx(0.0);
    }
};

bool polar_shape(Shape s) { return s == Shape::disc || s == Shape::half_disc; }

void setup(Workspace& w, const CRProblem& p) {
    w.grid = make_grid(p.domain);
    w.p = &p;
    if (!p.initial_guess) throw std::invalid_argument("solve_cr: initial guess required");
    if (polar_shape(p.domain.shape) && (p.su_s || p.su_t || p.aff_s || p.aff_t))
        throw std::invalid_argument("solve_cr: polar grids support A = 0 only");
    if (p.domain.shape == Shape::cylinder && p.ends == EndMode::boundary_ends)
        throw std::invalid_argument("solve_cr: cylinder has no ends");

    // smallest cell size sets the escape band near the ideal boundary
    if (polar_shape(p.domain.shape)) {
        w.hmin = 1.0 / p.domain.ns;
    } else {
        w.hmin = std::min(p.domain.length_s / p.domain.ns, 1.0 / p.domain.nt);
    }

    // boundary data must vary smoothly along each arc
    bool has_bc_data = p.model == Model::half_plane ? bool(p.line_lambda) : bool(p.germ);
    if (has_bc_data) {
        for (const BoundaryEdge& e : w.grid.boundary_edges) {
            bool is_end_arc = e.arc == 2 || e.arc == 3;
            if (is_end_arc && p.ends != EndMode::boundary_ends) continue;
            const GridNode& n0 = w.grid.nodes[e.n0];
            const GridNode& n1 = w.grid.nodes[e.n1];
            double deriv;
            if (p.model == Model::half_plane) {
                deriv = std::abs(p.line_lambda(n1.a, n1.b) - p.line_lambda(n0.a, n0.b)) / e.len;
            } else {
                deriv = std::abs(std::remainder(p.germ(n1.a, n1.b).endpoint.angle -
                                                    p.germ(n0.a, n0.b).endpoint.angle,
                                                kTwoPi)) /
                        e.len;
            }
            if (deriv > 1e3)
                throw std::invalid_argument(
                    "solve_cr: boundary data varies too fast along the arc");
        }
    }

    int n = static_cast<int>(w.grid.nodes.size());
    w.dofs.resize(n);
    w.u.resize(n);
    w.q.assign(2 * std::size_t(n), 0.0);
    int next = 0;
    for (int k = 0; k < n; ++k) {
        const GridNode& node = w.grid.nodes[k];
        NodeDof d;
        bool is_bvp_boundary = node.kind == NodeKind::side_boundary ||
                               (node.kind == NodeKind::end && p.ends == EndMode::boundary_ends);
        cplx init = p.initial_guess(node.a, node.b);
        if (is_bvp_boundary) {
            if (p.model == Model::half_plane) {
                if (!p.line_lambda)
                    throw std::invalid_argument("solve_cr: line boundary data required");
                d.kind = NodeDof::line1;
                d.lambda = p.line_lambda(node.a, node.b);
                d.offset = next++;
                w.q[d.offset] = std::max(init.imag(), 1e-6);
            } else {
                if (!p.germ) throw std::invalid_argument("solve_cr: germ boundary data required");
                d.kind = NodeDof::germ1;
                d.germ = p.germ(node.a, node.b);
                d.offset = next++;
                w.q[d.offset] = 0.0;  // start at the anchor
            }
        } else if (node.kind == NodeKind::end && p.ends == EndMode::dirichlet_ends) {
            d.kind = NodeDof::fixed0;
            if (!p.end_values) throw std::invalid_argument("solve_cr: end values required");
            w.u[k] = p.end_values(node.a, node.b);
        } else {
            d.kind = NodeDof::free2;
            d.offset = next;
            next += 2;
            w.q[d.offset] = init.real();
            w.q[d.offset + 1] = init.imag();
        }
        w.dofs[k] = d;
    }
    w.n_unknowns = next;
    w.q.resize(next);
}

// Refresh node values from the unknowns; clamp and count escapes.
int refresh_values(Workspace& w) {
    int clamped = 0;
    const CRProblem& p = *w.p;
    // the clamp radius never drops below 0.85: the escape band is meant to
    // hug the ideal boundary, not swallow the domain on coarse grids
    double disc_limit = std::max(1.0 - p.options.clamp_factor * w.hmin, 0.85);
    double im_floor = p.options.clamp_factor * w.hmin * p.options.im_floor_scale;
    for (std::size_t k = 0; k < w.grid.nodes.size(); ++k) {
        NodeDof& d = w.dofs[k];
        switch (d.kind) {
            case NodeDof::fixed0: break;
            case NodeDof::line1: {
                double& y = w.q[d.offset];
                if (y < im_floor) {
                    y = im_floor;
                    ++clamped;
                }
                w.u[k] = cplx(d.lambda, y);
                break;
            }
            case NodeDof::germ1: {
                cplx val = germ_point(d.germ, w.q[d.offset]);
                if (std::abs(val) > disc_limit) ++clamped;  // germ values stay inside B
                w.u[k] = val;
                break;
            }
            case NodeDof::free2: {
                cplx val(w.q[d.offset], w.q[d.offset + 1]);
                if (p.model == Model::disc) {
                    if (std::abs(val) > disc_limit) {
                        val *= disc_limit / std::abs(val);
                        w.q[d.offset] = val.real();
                        w.q[d.offset + 1] = val.imag();
                        ++clamped;
                    }
                } else {
                    if (val.imag() < im_floor) {
                        val = cplx(val.real(), im_floor);
                        w.q[d.offset + 1] = im_floor;
                        ++clamped;
                    }
                }
                w.u[k] = val;
                break;
            }
        }
    }
    if (clamped > 0) w.ever_clamped = true;
    return clamped;
}

// residual and (optionally) Jacobian triplets
double assemble(Workspace& w, Eigen::VectorXd* r_out,
                std::vector<Eigen::Triplet<double>>* jac_out) {
    const auto& cells = w.grid.cells;
    double sq = 0.0;
    if (r_out) r_out->resize(2 * static_cast<Eigen::Index>(cells.size()));
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const GridCell& cell = cells[c];
        cplx d1(0.0), d2(0.0), uc(0.0);
        for (int k = 0; k < 4; ++k) {
            cplx uk = w.u[cell.id[k]];
            d1 += cell.c1[k] * uk;
            d2 += cell.c2[k] * uk;
            uc += cell.av[k] * uk;
        }
        cplx x1 = w.twist1(cell.pa, cell.pb, uc);
        cplx x2 = w.twist2(cell.pa, cell.pb, uc) * cell.metric_r;  // metric_r = 1 off polar
        // equilibrate polar rows to the pointwise CR scale (keeps the normal
        // equations well conditioned under refinement)
        cplx rho = ((d1 - x1) - cplx(0.0, 1.0) * (d2 - x2)) / cell.metric_r;
        sq += std::norm(rho);
        if (r_out) {
            (*r_out)[2 * c] = rho.real();
            (*r_out)[2 * c + 1] = rho.imag();
        }
        if (jac_out) {
            cplx dX = w.dtwist1(cell.pa, cell.pb, uc) -
                      cplx(0.0, 1.0) * w.dtwist2(cell.pa, cell.pb, uc) * cell.metric_r;
            for (int k = 0; k < 4; ++k) {
                const NodeDof& d = w.dofs[cell.id[k]];
                if (d.kind == NodeDof::fixed0) continue;
                cplx dr_du =
                    (cplx(cell.c1[k], -cell.c2[k]) - dX * cell.av[k]) / cell.metric_r;
                auto push = [&](int col, cplx val) {
                    jac_out->emplace_back(2 * c, col, val.real());
                    jac_out->emplace_back(2 * c + 1, col, val.imag());
                };
                if (d.kind == NodeDof::free2) {
                    push(d.offset, dr_du);
                    push(d.offset + 1, dr_du * cplx(0.0, 1.0));
                } else if (d.kind == NodeDof::line1) {
                    push(d.offset, dr_du * cplx(0.0, 1.0));
                } else {  // germ1
                    cplx dgamma = germ_point_derivative(d.germ, w.q[d.offset]);
                    push(d.offset, dr_du * dgamma);
                }
            }
        }
    }
    return sq;
}

}  // namespace

SolveResult solve_cr(const CRProblem& problem) {
    Workspace w;
    setup(w, problem);
    int clamped = refresh_values(w);

    const SolveOptions& opt = problem.options;
    const auto n_res = static_cast<Eigen::Index>(2 * w.grid.cells.size());
    double rms_scale = std::sqrt(double(n_res));

    Eigen::VectorXd r;
    std::vector<Eigen::Triplet<double>> trips;
    double sq = assemble(w, &r, nullptr);
    double mu = 1e-8;
    int it = 0;
    int stall = 0;
    double best = sq;
    for (; it < opt.max_iterations; ++it) {
        if (std::sqrt(sq) / rms_scale < opt.tol_rms) break;
        trips.clear();
        assemble(w, &r, &trips);
        Eigen::SparseMatrix<double> J(n_res, w.n_unknowns);
        J.setFromTriplets(trips.begin(), trips.end());
        Eigen::SparseMatrix<double> JtJ = Eigen::SparseMatrix<double>(J.transpose()) * J;
        Eigen::VectorXd g = J.transpose() * r;

        bool accepted = false;
        for (int attempt = 0; attempt < 12 && !accepted; ++attempt) {
            Eigen::SparseMatrix<double> M = JtJ;
            for (int k = 0; k < w.n_unknowns; ++k)
                M.coeffRef(k, k) += mu * (1.0 + JtJ.coeff(k, k));
            Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(M);
            if (solver.info() != Eigen::Success) {
                mu *= 10.0;
                continue;
            }
            Eigen::VectorXd delta = solver.solve(-g);
            std::vector<double> saved = w.q;
            for (int k = 0; k < w.n_unknowns; ++k) w.q[k] += delta[k];
            clamped = refresh_values(w);
            double sq_new = assemble(w, nullptr, nullptr);
            if (sq_new < sq) {
                sq = sq_new;
                mu = std::max(mu * 0.3, 1e-14);
                accepted = true;
            } else {
                w.q = saved;
                refresh_values(w);
                mu *= 10.0;
            }
        }
        if (!accepted) break;
        if (sq > best * 0.999) {
            if (++stall >= opt.stall_window) break;
        } else {
            stall = 0;
            best = sq;
        }
    }

    clamped = refresh_values(w);
    double rms = std::sqrt(assemble(w, nullptr, nullptr)) / rms_scale;

    SolveResult out;
    out.u.domain = problem.domain;
    out.u.model = problem.model;
    out.u.values = w.u;
    out.report.residual_rms = rms;
    out.report.iterations = it;
    out.report.stayed_inside = !w.ever_clamped;
    out.report.clamped_nodes = clamped;
    if (rms < opt.tol_rms && clamped == 0)
        out.report.outcome = SolveOutcome::converged_interior;
    else if (clamped > 0)
        out.report.outcome = SolveOutcome::escape;
    else
        out.report.outcome = SolveOutcome::plateau;
    return out;
}

double cr_residual_rms(const GridMap& u, const CRProblem& problem) {
    Workspace w;
    setup(w, problem);
    if (u.values.size() != w.u.size())
        throw std::invalid_argument("cr_residual_rms: grid size mismatch");
    w.u = u.values;
    double sq = assemble(w, nullptr, nullptr);
    return std::sqrt(sq) / std::sqrt(double(2 * w.grid.cells.size()));
}

}  // namespace hypcr
