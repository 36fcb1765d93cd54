#include "hypcr/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hypcr {

namespace {

double urand(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// membership window helper: value in (0, 2pi), margin = distance to {0, 2pi}
double window_margin(double v) { return std::min(v, kTwoPi - v); }

}  // namespace

bool check_paff_interval(const IntervalDatumAff& x) { return margin_paff_interval(x) > 0.0; }

double margin_paff_interval(const IntervalDatumAff& x) {
    AffMap g = integrate_transport(x.connection, 0.0, 1.0);
    return x.lambda0 - g.inverse()(x.lambda1);
}

bool check_p_interval(const IntervalDatumLifted& x) { return margin_p_interval(x) > 0.0; }

double margin_p_interval(const IntervalDatumLifted& x) {
    NaturalLift lift = transport_with_lift(x.connection, 0.0, 1.0);
    // lambda0 - g~^{-1}(lambda1) in (0,2pi) iff lambda1 < g~(lambda0) < lambda1 + 2pi;
    // the forward form avoids the iterative inversion at strict boundaries
    double v = lift.apply(x.lambda0) - x.lambda1;
    return window_margin(v);
}

bool check_ptau_circle(const LoopDatum& x, double tol) {
    LiftedHolonomy h = holonomy(x.connection);
    if (classify(h.element()) != IsometryClass::hyperbolic) return false;
    if (std::abs(std::abs(h.element().trace()) - x.tau) >= tol) return false;
    return h.rotation_number == 1;
}

bool check_c_aff(const std::vector<double>& labels) { return margin_c_aff(labels) > 0.0; }

double margin_c_aff(const std::vector<double>& labels) {
    if (labels.size() < 2) throw std::invalid_argument("check_c_aff: need >= 2 labels");
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j + 1 < labels.size(); ++j)
        m = std::min(m, labels[j] - labels[j + 1]);
    return m;
}

bool check_c(const DiscBoundaryConfig& config) { return margin_c(config) > 0.0; }

double margin_c(const DiscBoundaryConfig& config) {
    double m = margin_c_aff(config.labels);
    double gap = config.labels.front() - config.labels.back();
    return std::min(m, window_margin(gap));
}

namespace {

struct CTauParts {
    bool line1 = false;        // hyperbolic, rot 1, |tr| = tau
    double window_front_back;  // lambda_0 - g~^{-1}(lambda_d)
    bool consecutive_ok = true;
    double min_consecutive_margin = std::numeric_limits<double>::infinity();
    bool label0_in_big_small = false;
    bool descending = true;
};

CTauParts c_tau_parts(const PuncturedConfig& c, double trace_tol) {
    if (c.labels.empty()) throw std::invalid_argument("check_c_tau: need >= 1 label");
    CTauParts p;
    const MoebiusMap& g = c.holonomy.element();
    bool hyper = classify(g) == IsometryClass::hyperbolic;
    if (hyper) {
        int rot = c.holonomy.lift.rotation_number();
        if (rot != c.holonomy.rotation_number)
            throw std::runtime_error("check_c_tau: stored rotation number disagrees with lift");
        p.line1 = rot == 1 && std::abs(std::abs(g.trace()) - c.tau) < trace_tol;
    }
    // forward form of lambda_0 - g~^{-1}(lambda_d) in (0, 2pi)
    p.window_front_back = c.holonomy.lift.apply(c.labels.front()) - c.labels.back();
    for (std::size_t j = 0; j + 1 < c.labels.size(); ++j) {
        double gap = c.labels[j] - c.labels[j + 1];
        p.min_consecutive_margin = std::min(p.min_consecutive_margin, window_margin(gap));
        if (!(gap > 0.0 && gap < kTwoPi)) p.consecutive_ok = false;
        if (!(gap > 0.0)) p.descending = false;
    }
    if (hyper) {
        FixedPoints fp = fixed_points(g);
        double arc = normalize_angle(fp.l_small.angle - fp.l_big.angle);
        double u = normalize_angle(c.labels.front() - fp.l_big.angle);
        p.label0_in_big_small = u > 0.0 && u < arc;
    }
    return p;
}

}  // namespace

bool check_c_tau(const PuncturedConfig& config, double trace_tol) {
    CTauParts p = c_tau_parts(config, trace_tol);
    bool window_ok = p.window_front_back > 0.0 && p.window_front_back < kTwoPi;
    bool direct = p.line1 && window_ok && p.consecutive_ok;
    bool simplified = p.line1 && p.label0_in_big_small && window_ok && p.descending;
    if (direct != simplified)
        throw std::runtime_error(
            "check_c_tau: direct and simplified formulations disagree (lift failure)");
    return direct;
}

double margin_c_tau(const PuncturedConfig& config) {
    CTauParts p = c_tau_parts(config, 1e-6);
    double m = window_margin(p.window_front_back);
    if (config.labels.size() > 1) m = std::min(m, p.min_consecutive_margin);
    return m;
}

IntervalDatumAff construct_interval_datum(double lambda0, double lambda1, std::uint64_t seed,
                                          int nodes) {
    std::mt19937_64 rng(seed);
    double gap = std::exp(urand(rng, -1.0, 1.0));
    double rho = std::exp(urand(rng, -1.0, 1.0));
    AffMap g(rho, lambda1 - rho * (lambda0 - gap));  // g(lambda0 - gap) = lambda1
    AffLieElement gamma = aff_log(g);
    double c = urand(rng, -0.12, 0.12);
    auto dprofile = [c](double t) { return 1.0 + kTwoPi * c * std::cos(kTwoPi * t); };
    return {make_profiled_connection<AffGroup>(gamma, dprofile, nodes), lambda0, lambda1};
}

IntervalDatumLifted construct_interval_datum_lifted(double lambda0, double lambda1,
                                                    std::uint64_t seed, double window,
                                                    int nodes) {
    std::mt19937_64 rng(seed);
    if (window < 0.0) window = urand(rng, 0.3, kTwoPi - 0.3);
    if (!(window > 0.0 && window < kTwoPi))
        throw std::invalid_argument("construct_interval_datum_lifted: unsatisfiable window");
    double phi = lambda1 - lambda0 + window;  // lifted boundary translation amount
    LieElement rot{phi / 2.0, 0.0};
    double c = urand(rng, -0.12, 0.12);
    auto dprofile = [c](double t) { return 1.0 + kTwoPi * c * std::cos(kTwoPi * t); };
    return {make_profiled_connection<SU11Group>(rot, dprofile, nodes), lambda0, lambda1};
}

LoopDatum construct_ptau_loop(double tau, std::uint64_t seed, int nodes) {
    std::mt19937_64 rng(seed);
    auto a = make_rot1_loop(tau, nodes);
    // conjugate by a random constant gauge: stays in the space
    MoebiusMap k = exp_lie({urand(rng, -0.8, 0.8),
                            cplx(urand(rng, -0.8, 0.8), urand(rng, -0.8, 0.8))},
                           1.0);
    for (auto& s : a.samples) s = adjoint(k, s);
    return LoopDatum(std::move(a), tau);
}

PuncturedConfig construct_c_tau_point(int d, double tau, std::uint64_t seed) {
    if (d < 0) throw std::invalid_argument("construct_c_tau_point: d >= 0 required");
    if (!(tau > 2.0)) throw std::invalid_argument("construct_c_tau_point: tau > 2 required");
    std::mt19937_64 rng(seed);
    double label0 = urand(rng, -10.0, 10.0);
    double th0 = normalize_angle(label0);
    double u1 = urand(rng, 0.2, kPi - 0.2);
    double u2 = urand(rng, 0.2, kPi - 0.2);
    BoundaryPoint l_big(th0 - u1), l_small(th0 + u2);
    MoebiusMap g = hyperbolic_with_axis(l_small, l_big, tau);
    NaturalLift lift = NaturalLift::with_rotation_number(g, 1);

    LiftedHolonomy hol;
    hol.lift = lift;
    hol.rotation_number = 1;
    hol.tracked_angle = fixed_points(g).l_small.angle;

    PuncturedConfig config;
    config.holonomy = hol;
    config.tau = tau;
    if (d == 0) {
        config.labels = {label0};
    } else {
        double hi = lift.apply(label0);  // labels admissible in (hi - 2pi, label0)
        double last = 0.5 * ((hi - kTwoPi) + label0);
        config.labels.resize(d + 1);
        for (int j = 0; j <= d; ++j)
            config.labels[j] = label0 - (label0 - last) * double(j) / d;
    }
    return config;
}

LiftedPoint default_sheet_anchor(const PuncturedConfig& config) {
    FixedPoints fp = fixed_points(config.holonomy.element());
    double arc = normalize_angle(fp.l_small.angle - fp.l_big.angle);
    return LiftedPoint(fp.l_big.angle + 0.5 * arc);
}

namespace {

int component_index(const FixedPoints& fp, double x) {
    double arc = normalize_angle(fp.l_small.angle - fp.l_big.angle);
    double u = x - fp.l_big.angle;
    double k = std::floor(u / kTwoPi);
    double frac = u - kTwoPi * k;
    if (!(frac > 0.0 && frac < arc))
        throw std::invalid_argument("sheet_index: point is not over (l_big, l_small)");
    return static_cast<int>(k);
}

}  // namespace

int sheet_index(const PuncturedConfig& config, const LiftedPoint& anchor) {
    FixedPoints fp = fixed_points(config.holonomy.element());
    return component_index(fp, config.labels.front()) - component_index(fp, anchor.value);
}

int sheet_index(const PuncturedConfig& config) {
    return sheet_index(config, default_sheet_anchor(config));
}

NaturalLift lift_of_exp(const LieElement& gamma, double t) {
    const int steps = 512;
    double c = 0.0;
    cplx prev(1.0, 0.0);
    for (int k = 1; k <= steps; ++k) {
        MoebiusMap g = exp_lie(gamma, t * k / steps);
        cplx cur = std::conj(g.a());
        // exp_lie canonicalizes the sign; the branch tracking absorbs flips
        double d = std::arg(cur / prev);
        if (d > kPi / 2.0) d -= kPi;
        if (d < -kPi / 2.0) d += kPi;
        c += d;
        prev = cur;
    }
    return NaturalLift(exp_lie(gamma, t), c);
}

NaturalLift compose_lifts(const NaturalLift& g1, const NaturalLift& g2) {
    MoebiusMap g = g1.element() * g2.element();
    double y = g1.apply(g2.apply(0.0));
    cplx ratio = std::conj(g.b()) / std::conj(g.a());
    double c = -0.5 * y - std::arg(1.0 + ratio);
    return NaturalLift(g, c);
}

}  // namespace hypcr
