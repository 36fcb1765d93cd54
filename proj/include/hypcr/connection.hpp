#pragma once

#include <functional>
#include <vector>

#include "hypcr/affine.hpp"
#include "hypcr/lift.hpp"
#include "hypcr/moebius.hpp"

// Sampled g-valued one-forms A = a_t dt on [0,1] or the circle R/Z, with
// piecewise-linear interpolation between uniform nodes.  Parallel transport
// solves dPhi/dt = a_t Phi by a midpoint product of exponentials.

namespace hypcr {

struct SU11Group {
    using Element = MoebiusMap;
    using Algebra = LieElement;
    static Element identity() { return MoebiusMap::identity(); }
    static Element exp(const Algebra& g, double t) { return exp_lie(g, t); }
    static Algebra log(const Element& g) { return log_lie(g); }
    static Algebra ad(const Element& g, const Algebra& x) { return adjoint(g, x); }
    static double dist(const Element& g, const Element& h) { return distance(g, h); }
};

struct AffGroup {
    using Element = AffMap;
    using Algebra = AffLieElement;
    static Element identity() { return AffMap::identity(); }
    static Element exp(const Algebra& g, double t) { return aff_exp(g, t); }
    static Algebra log(const Element& g) { return aff_log(g); }
    static Algebra ad(const Element& g, const Algebra& x) { return aff_adjoint(g, x); }
    static double dist(const Element& g, const Element& h) { return distance(g, h); }
};

enum class PathDomain { interval, circle };

template <class G>
struct PathConnection {
    using Algebra = typename G::Algebra;

    PathDomain domain = PathDomain::interval;
    std::vector<Algebra> samples;  // interval: nodes k/(N-1); circle: nodes k/N, cyclic

    int node_count() const { return static_cast<int>(samples.size()); }

    double node_spacing() const {
        int n = node_count();
        return domain == PathDomain::circle ? 1.0 / n : 1.0 / (n - 1);
    }

    Algebra at(double t) const {
        int n = node_count();
        if (domain == PathDomain::circle) {
            double u = t - std::floor(t);
            double x = u * n;
            int k = static_cast<int>(std::floor(x));
            double f = x - k;
            const Algebra& a0 = samples[k % n];
            const Algebra& a1 = samples[(k + 1) % n];
            return a0 * (1.0 - f) + a1 * f;
        }
        double x = t * (n - 1);
        int k = static_cast<int>(std::floor(x));
        if (k < 0) k = 0;
        if (k > n - 2) k = n - 2;
        double f = x - k;
        return samples[k] * (1.0 - f) + samples[k + 1] * f;
    }
};

template <class G>
struct GaugePath {
    PathDomain domain = PathDomain::interval;
    std::vector<typename G::Element> samples;  // same node layout as PathConnection
};

template <class G>
PathConnection<G> make_constant_connection(const typename G::Algebra& gamma, int nodes,
                                           PathDomain dom = PathDomain::interval) {
    if (nodes < 2) throw std::invalid_argument("PathConnection: need at least 2 nodes");
    PathConnection<G> a;
    a.domain = dom;
    a.samples.assign(nodes, gamma);
    return a;
}

// Connection with a_t = p'(t) gamma, whose transport from 0 to t is
// exp((p(t)-p(0)) gamma).
template <class G>
PathConnection<G> make_profiled_connection(const typename G::Algebra& gamma,
                                           const std::function<double(double)>& dprofile,
                                           int nodes, PathDomain dom = PathDomain::interval) {
    if (nodes < 2) throw std::invalid_argument("PathConnection: need at least 2 nodes");
    PathConnection<G> a;
    a.domain = dom;
    a.samples.reserve(nodes);
    for (int k = 0; k < nodes; ++k) {
        double t = dom == PathDomain::circle ? double(k) / nodes : double(k) / (nodes - 1);
        a.samples.push_back(gamma * dprofile(t));
    }
    return a;
}

template <class G>
PathConnection<G> reverse_connection(const PathConnection<G>& a) {
    PathConnection<G> r;
    r.domain = a.domain;
    int n = a.node_count();
    r.samples.resize(n);
    if (a.domain == PathDomain::circle) {
        for (int k = 0; k < n; ++k) r.samples[k] = -a.samples[(n - k) % n];
    } else {
        for (int k = 0; k < n; ++k) r.samples[k] = -a.samples[n - 1 - k];
    }
    return r;
}

// Transport of A over [t0, t1] (t0 <= t1; arcs may wrap on the circle).
// Midpoint-sampled exponential steps, second order; steps are aligned with the
// sample grid so concatenation at grid nodes is exact.
template <class G>
typename G::Element integrate_transport(const PathConnection<G>& a, double t0, double t1,
                                        int substeps_per_interval = 2);

// Path Phi_{t_k} at the connection's own nodes, Phi_0 = identity.
template <class G>
GaugePath<G> transport_path(const PathConnection<G>& a, int substeps_per_interval = 2);

// Phi_* A = Phi A Phi^{-1} + (dPhi) Phi^{-1}, dPhi by centered differences
// (wrap-around on the circle, one-sided second order at interval ends).
template <class G>
PathConnection<G> gauge_transform(const GaugePath<G>& phi, const PathConnection<G>& a);

// su(1,1)-specific transport with the natural lift of the boundary action.
NaturalLift transport_with_lift(const PathConnection<SU11Group>& a, double t0, double t1,
                                int substeps_per_interval = 2);

struct LiftedHolonomy {
    NaturalLift lift;
    int rotation_number = 0;
    std::vector<double> lift_trace;  // unwound angle of the tracked point at the nodes
    double tracked_angle = 0.0;      // angle of l_small of the holonomy

    const MoebiusMap& element() const { return lift.element(); }
};

// Holonomy of a circle connection.  Requires a hyperbolic element; the
// rotation number is read at l_small and must round cleanly.
LiftedHolonomy holonomy(const PathConnection<SU11Group>& a, int substeps_per_interval = 2,
                        double class_tol = 1e-9, double round_tol = 0.05);

// g~(l~) - l~ for the stored natural lift.
double lifted_shift(const LiftedHolonomy& h, double ltilde);

// The loop R(2 pi t) exp(t gamma) with gamma = (0, arccosh(tau/2)); holonomy
// is hyperbolic with |trace| = tau and rotation number 1.
PathConnection<SU11Group> make_rot1_loop(double tau, int nodes);

}  // namespace hypcr
