#include "hypcr/connection.hpp"

#include <cmath>

namespace hypcr {

namespace {

// Integration breakpoints: t0, every grid node strictly inside, t1.
std::vector<double> breakpoints(double t0, double t1, int grid_n, PathDomain dom) {
    std::vector<double> bp{t0};
    double spacing = dom == PathDomain::circle ? 1.0 / grid_n : 1.0 / (grid_n - 1);
    int k0 = static_cast<int>(std::floor(t0 / spacing)) + 1;
    for (int k = k0;; ++k) {
        double t = k * spacing;
        if (t >= t1 - 1e-15) break;
        if (t > t0 + 1e-15) bp.push_back(t);
    }
    bp.push_back(t1);
    return bp;
}

}  // namespace

template <class G>
typename G::Element integrate_transport(const PathConnection<G>& a, double t0, double t1,
                                        int substeps) {
    if (a.node_count() < 2) throw std::invalid_argument("integrate_transport: N >= 2 required");
    if (a.domain == PathDomain::interval && (t0 < -1e-12 || t1 > 1.0 + 1e-12 || t0 > t1))
        throw std::invalid_argument("integrate_transport: need 0 <= t0 <= t1 <= 1");
    if (t1 < t0) throw std::invalid_argument("integrate_transport: need t0 <= t1");
    typename G::Element phi = G::identity();
    for (auto bp = breakpoints(t0, t1, a.node_count(), a.domain); bp.size() >= 2;) {
        for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
            double len = (bp[i + 1] - bp[i]) / substeps;
            for (int j = 0; j < substeps; ++j) {
                double mid = bp[i] + (j + 0.5) * len;
                phi = G::exp(a.at(mid), len) * phi;
            }
        }
        break;
    }
    return phi;
}

template <class G>
GaugePath<G> transport_path(const PathConnection<G>& a, int substeps) {
    GaugePath<G> path;
    path.domain = a.domain;
    int n = a.node_count();
    path.samples.reserve(a.domain == PathDomain::circle ? n + 1 : n);
    typename G::Element phi = G::identity();
    path.samples.push_back(phi);
    double spacing = a.node_spacing();
    int steps = a.domain == PathDomain::circle ? n : n - 1;
    for (int k = 0; k < steps; ++k) {
        for (int j = 0; j < substeps; ++j) {
            double mid = k * spacing + (j + 0.5) * spacing / substeps;
            phi = G::exp(a.at(mid), spacing / substeps) * phi;
        }
        path.samples.push_back(phi);
    }
    return path;
}

template <class G>
PathConnection<G> gauge_transform(const GaugePath<G>& phi, const PathConnection<G>& a) {
    int n = a.node_count();
    int pn = static_cast<int>(phi.samples.size());
    bool circle = a.domain == PathDomain::circle;
    if (phi.domain != a.domain || pn != n)
        throw std::invalid_argument("gauge_transform: node-count or domain mismatch");
    if (n < 4) throw std::invalid_argument("gauge_transform: need at least 4 nodes");
    double h = a.node_spacing();
    PathConnection<G> out;
    out.domain = a.domain;
    out.samples.resize(n);
    auto dlog = [&](int hi, int lo) {
        return G::log(phi.samples[hi] * phi.samples[lo].inverse());
    };
    // (dPhi)Phi^{-1}: fourth-order centered stencil in symmetric log form
    // (the [a',a] corrections of the two half-width logs cancel); one-sided
    // third-order at interval ends.
    auto centered4 = [&](int k) {
        int km2 = (k - 2 + n) % n, km1 = (k - 1 + n) % n;
        int kp1 = (k + 1) % n, kp2 = (k + 2) % n;
        return (dlog(kp1, km1) * 8.0 - dlog(kp2, km2)) * (1.0 / (12.0 * h));
    };
    auto onesided3 = [&](int k, int dir) {
        auto L = [&](int j) { return dlog(k + dir * j, k); };
        return (L(1) * 18.0 - L(2) * 9.0 + L(3) * 2.0) * (dir / (6.0 * h));
    };
    for (int k = 0; k < n; ++k) {
        typename G::Algebra deriv;
        if (circle) {
            deriv = centered4(k);
        } else if (k == 0) {
            deriv = onesided3(0, +1);
        } else if (k == n - 1) {
            deriv = onesided3(n - 1, -1);
        } else if (k == 1 || k == n - 2) {
            deriv = dlog(k + 1, k - 1) * (1.0 / (2.0 * h));
        } else {
            deriv = centered4(k);
        }
        out.samples[k] = G::ad(phi.samples[k], a.samples[k]) + deriv;
    }
    return out;
}

template MoebiusMap integrate_transport<SU11Group>(const PathConnection<SU11Group>&, double,
                                                   double, int);
template AffMap integrate_transport<AffGroup>(const PathConnection<AffGroup>&, double, double,
                                              int);
template GaugePath<SU11Group> transport_path<SU11Group>(const PathConnection<SU11Group>&, int);
template GaugePath<AffGroup> transport_path<AffGroup>(const PathConnection<AffGroup>&, int);
template PathConnection<SU11Group> gauge_transform<SU11Group>(const GaugePath<SU11Group>&,
                                                              const PathConnection<SU11Group>&);
template PathConnection<AffGroup> gauge_transform<AffGroup>(const GaugePath<AffGroup>&,
                                                            const PathConnection<AffGroup>&);

namespace {

// Raw (non-canonicalized) transport state with continuous arg(conj(a)) branch.
struct LiftState {
    cplx a{1.0, 0.0}, b{0.0, 0.0};
    double c = 0.0;

    void step(const MoebiusMap& e) {
        cplx na = e.a() * a + e.b() * std::conj(b);
        cplx nb = e.a() * b + e.b() * std::conj(a);
        c += std::arg(std::conj(na) / std::conj(a));
        double det = std::sqrt(std::norm(na) - std::norm(nb));
        a = na / det;
        b = nb / det;
    }

    NaturalLift lift() const { return NaturalLift(MoebiusMap(a, b), c); }
};

}  // namespace

NaturalLift transport_with_lift(const PathConnection<SU11Group>& a, double t0, double t1,
                                int substeps) {
    LiftState st;
    for (auto bp = breakpoints(t0, t1, a.node_count(), a.domain); bp.size() >= 2;) {
        for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
            double len = (bp[i + 1] - bp[i]) / substeps;
            for (int j = 0; j < substeps; ++j) {
                double mid = bp[i] + (j + 0.5) * len;
                st.step(exp_lie(a.at(mid), len));
            }
        }
        break;
    }
    return st.lift();
}

LiftedHolonomy holonomy(const PathConnection<SU11Group>& a, int substeps, double class_tol,
                        double round_tol) {
    if (a.domain != PathDomain::circle)
        throw std::invalid_argument("holonomy: circle connection required");
    int n = a.node_count();
    double h = 1.0 / n;
    LiftState st;
    std::vector<NaturalLift> at_nodes;
    at_nodes.reserve(n + 1);
    at_nodes.push_back(st.lift());
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < substeps; ++j) {
            double mid = k * h + (j + 0.5) * h / substeps;
            st.step(exp_lie(a.at(mid), h / substeps));
        }
        at_nodes.push_back(st.lift());
    }
    LiftedHolonomy out;
    out.lift = at_nodes.back();
    out.rotation_number = out.lift.rotation_number(class_tol, round_tol);
    out.tracked_angle = fixed_points(out.element(), class_tol).l_small.angle;
    out.lift_trace.reserve(at_nodes.size());
    for (const auto& l : at_nodes) out.lift_trace.push_back(l.apply(out.tracked_angle));
    for (std::size_t k = 0; k + 1 < out.lift_trace.size(); ++k)
        if (std::abs(out.lift_trace[k + 1] - out.lift_trace[k]) >= kPi)
            throw std::runtime_error("holonomy: lift trace jumped; refine the sampling");
    return out;
}

double lifted_shift(const LiftedHolonomy& h, double ltilde) {
    return h.lift.apply(ltilde) - ltilde;
}

PathConnection<SU11Group> make_rot1_loop(double tau, int nodes) {
    if (!(tau > 2.0)) throw std::invalid_argument("make_rot1_loop: tau > 2 required");
    double beta0 = std::acosh(tau / 2.0);
    PathConnection<SU11Group> a;
    a.domain = PathDomain::circle;
    a.samples.reserve(nodes);
    for (int k = 0; k < nodes; ++k) {
        double t = double(k) / nodes;
        a.samples.push_back({kPi, std::polar(beta0, kTwoPi * t)});
    }
    return a;
}

}  // namespace hypcr
