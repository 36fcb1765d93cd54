#include "hypcr/jobspec.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "hypcr/cr/energy.hpp"
#include "hypcr/cr/solver.hpp"
#include "hypcr/cylinder.hpp"
#include "hypcr/moduli.hpp"
#include "hypcr/schwarz.hpp"

namespace hypcr {

std::string inputs_hash(const json& job) {
    std::string dump = job.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

// field -> required?
using Schema = std::map<std::string, bool>;

const std::map<std::string, Schema>& schemas() {
    static const std::map<std::string, Schema> table = {
        {"classify", {{"a", true}, {"b", true}, {"tol", false}}},
        {"transport", {{"connection", true}, {"t0", false}, {"t1", false}}},
        {"holonomy", {{"connection", true}}},
        {"rotnum", {{"connection", true}}},
        {"gauge", {{"connection", true}, {"gauge_profile", true}}},
        {"check-space", {{"space", true}, {"datum", true}, {"tol", false}}},
        {"construct",
         {{"target", true},
          {"lambda0", false},
          {"lambda1", false},
          {"tau", false},
          {"d", false},
          {"seed", false}}},
        {"sheet-index", {{"config", true}, {"anchor", false}}},
        {"schwarz-integral",
         {{"profile", true}, {"z", true}, {"truncation", false}, {"tol", false}}},
        {"solve-cr",
         {{"domain", true},
          {"model", true},
          {"twist", false},
          {"boundary", false},
          {"ends", true},
          {"initial", true},
          {"tol", false},
          {"max_iterations", false}}},
        {"energy", {{"problem", true}, {"grid_csv", true}}},
        {"beta-form",
         {{"germ_endpoint0", true},
          {"germ_endpoint_rate", true},
          {"germ_anchor", true},
          {"a_along", false},
          {"arc_positions", true},
          {"sigmas", true}}},
        {"schwarz-pick", {{"case", true}, {"nr", true}, {"c", false}}},
        {"cyl-bound",
         {{"tau", false}, {"tau_min", false}, {"tau_max", false}, {"count", false}}},
        {"cyl-experiment",
         {{"tau", true},
          {"l", true},
          {"seeds", true},
          {"seed0", false},
          {"ns", false},
          {"nt", false}}},
    };
    return table;
}

double jnum(const json& j, const char* what) {
    if (!j.is_number()) throw SchemaError(std::string("expected number for ") + what);
    return j.get<double>();
}

cplx jcplx(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw SchemaError(std::string("expected [re, im] for ") + what);
    return {jnum(j[0], what), jnum(j[1], what)};
}

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

LieElement jelem(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3)
        throw SchemaError(std::string("expected [alpha, beta_re, beta_im] for ") + what);
    return {jnum(j[0], what), {jnum(j[1], what), jnum(j[2], what)}};
}

json elem_json(const LieElement& g) {
    return json::array({g.alpha, g.beta.real(), g.beta.imag()});
}

PathConnection<SU11Group> jconnection(const json& j) {
    if (!j.is_object()) throw SchemaError("connection must be an object");
    if (j.contains("recipe")) {
        std::string recipe = j.at("recipe").get<std::string>();
        int nodes = j.value("nodes", 2048);
        if (recipe == "rot1") return make_rot1_loop(jnum(j.at("tau"), "tau"), nodes);
        if (recipe == "constant") {
            PathDomain dom = j.value("domain", std::string("interval")) == "circle"
                                 ? PathDomain::circle
                                 : PathDomain::interval;
            return make_constant_connection<SU11Group>(jelem(j.at("element"), "element"),
                                                       nodes, dom);
        }
        throw SchemaError("unknown connection recipe: " + recipe);
    }
    PathConnection<SU11Group> a;
    a.domain = j.value("domain", std::string("interval")) == "circle" ? PathDomain::circle
                                                                      : PathDomain::interval;
    for (const auto& s : j.at("samples")) a.samples.push_back(jelem(s, "samples"));
    if (a.node_count() < 2) throw SchemaError("connection needs at least 2 samples");
    return a;
}

json connection_json(const PathConnection<SU11Group>& a) {
    json samples = json::array();
    for (const auto& s : a.samples) samples.push_back(elem_json(s));
    return {{"domain", a.domain == PathDomain::circle ? "circle" : "interval"},
            {"samples", samples}};
}

PathConnection<AffGroup> jconnection_aff(const json& j) {
    PathConnection<AffGroup> a;
    a.domain = j.value("domain", std::string("interval")) == "circle" ? PathDomain::circle
                                                                      : PathDomain::interval;
    for (const auto& s : j.at("samples")) {
        if (!s.is_array() || s.size() != 2)
            throw SchemaError("affine samples are [scale_rate, shift_rate]");
        a.samples.push_back({jnum(s[0], "sample"), jnum(s[1], "sample")});
    }
    if (a.node_count() < 2) throw SchemaError("connection needs at least 2 samples");
    return a;
}

json moebius_json(const MoebiusMap& g) {
    return {{"a", cplx_json(g.a())}, {"b", cplx_json(g.b())}};
}

PuncturedConfig jconfig(const json& j) {
    PuncturedConfig c;
    c.tau = jnum(j.at("tau"), "tau");
    for (const auto& l : j.at("labels")) c.labels.push_back(jnum(l, "labels"));
    const json& h = j.at("holonomy");
    MoebiusMap g(jcplx(h.at("a"), "a"), jcplx(h.at("b"), "b"));
    c.holonomy.lift = NaturalLift(g, jnum(h.at("lift_const"), "lift_const"));
    c.holonomy.rotation_number = h.at("rotation_number").get<int>();
    c.holonomy.tracked_angle = fixed_points(g).l_small.angle;
    return c;
}

json config_json(const PuncturedConfig& c) {
    return {{"tau", c.tau},
            {"labels", c.labels},
            {"holonomy",
             {{"a", cplx_json(c.holonomy.element().a())},
              {"b", cplx_json(c.holonomy.element().b())},
              {"lift_const", c.holonomy.lift.lift_const()},
              {"rotation_number", c.holonomy.rotation_number}}}};
}

DomainSpec jdomain(const json& j) {
    DomainSpec d;
    std::string shape = j.at("shape").get<std::string>();
    if (shape == "rectangle") d.shape = Shape::rectangle;
    else if (shape == "cylinder") d.shape = Shape::cylinder;
    else if (shape == "disc") d.shape = Shape::disc;
    else if (shape == "half-disc") d.shape = Shape::half_disc;
    else throw SchemaError("unknown shape: " + shape);
    d.ns = j.at("ns").get<int>();
    d.nt = j.at("nt").get<int>();
    d.length_s = j.value("length", 1.0);
    return d;
}

CRProblem jproblem(const json& j) {
    CRProblem p;
    p.domain = jdomain(j.at("domain"));
    std::string model = j.at("model").get<std::string>();
    if (model == "half-plane") p.model = Model::half_plane;
    else if (model == "disc") p.model = Model::disc;
    else throw SchemaError("unknown model: " + model);

    if (j.contains("twist")) {
        const json& tw = j.at("twist");
        std::string kind = tw.at("kind").get<std::string>();
        if (kind == "none") {
        } else if (kind == "su-constant-t") {
            LieElement g = jelem(tw.at("element"), "element");
            p.su_t = [g](double, double) { return g; };
        } else if (kind == "ptau-loop") {
            double beta0 = std::acosh(jnum(tw.at("tau"), "tau") / 2.0);
            p.su_t = [beta0](double, double t) {
                return LieElement{kPi, std::polar(beta0, kTwoPi * t)};
            };
        } else if (kind == "aff-constant") {
            AffLieElement gs{jnum(tw.at("s")[0], "s"), jnum(tw.at("s")[1], "s")};
            AffLieElement gt{jnum(tw.at("t")[0], "t"), jnum(tw.at("t")[1], "t")};
            p.aff_s = [gs](double, double) { return gs; };
            p.aff_t = [gt](double, double) { return gt; };
        } else {
            throw SchemaError("unknown twist kind: " + kind);
        }
    }
    if (j.contains("boundary")) {
        const json& bc = j.at("boundary");
        std::string kind = bc.at("kind").get<std::string>();
        if (kind == "line-const") {
            double v = jnum(bc.at("lambda"), "lambda");
            p.line_lambda = [v](double, double) { return v; };
        } else if (kind == "line-linear") {
            double c0 = bc.value("c0", 0.0), cs = bc.value("c_s", 0.0),
                   ct = bc.value("c_t", 0.0);
            p.line_lambda = [=](double a, double b) { return c0 + cs * a + ct * b; };
        } else if (kind == "germ-const") {
            GeodesicGerm germ(BoundaryPoint(jnum(bc.at("endpoint"), "endpoint")),
                              jcplx(bc.at("anchor"), "anchor"));
            p.germ = [germ](double, double) { return germ; };
        } else if (kind == "germ-rotating") {
            double e0 = jnum(bc.at("endpoint"), "endpoint");
            double rate = bc.value("rate", 0.0);
            cplx anchor = jcplx(bc.at("anchor"), "anchor");
            p.germ = [=](double a, double) {
                return GeodesicGerm(BoundaryPoint(e0 + rate * a), anchor);
            };
        } else {
            throw SchemaError("unknown boundary kind: " + kind);
        }
    }
    std::string ends = j.at("ends").get<std::string>();
    if (ends == "free") p.ends = EndMode::free_ends;
    else if (ends == "dirichlet-const") p.ends = EndMode::dirichlet_ends;
    else if (ends == "boundary") p.ends = EndMode::boundary_ends;
    else throw SchemaError("unknown ends mode: " + ends);

    const json& init = j.at("initial");
    cplx w0 = jcplx(init.at("value"), "initial value");
    double jitter = init.value("jitter", 0.0);
    std::uint64_t seed = init.value("seed", 0);
    if (p.ends == EndMode::dirichlet_ends) p.end_values = [w0](double, double) { return w0; };
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double js = jitter * unit(rng), jt = jitter * unit(rng);
    p.initial_guess = [=](double a, double b) {
        return w0 + cplx(js * std::sin(3.0 * a + b), jt * std::cos(2.0 * b));
    };
    if (j.contains("tol")) p.options.tol_rms = jnum(j.at("tol"), "tol");
    if (j.contains("max_iterations"))
        p.options.max_iterations = j.at("max_iterations").get<int>();
    return p;
}

json run_classify(const json& job) {
    MoebiusMap g(jcplx(job.at("a"), "a"), jcplx(job.at("b"), "b"));
    double tol = job.value("tol", 1e-9);
    json out;
    out["class"] = to_string(classify(g, tol));
    out["abs_trace"] = std::abs(g.trace());
    if (classify(g, tol) == IsometryClass::hyperbolic) {
        auto fp = fixed_points(g, tol);
        out["l_small_angle"] = fp.l_small.angle;
        out["l_big_angle"] = fp.l_big.angle;
    }
    return out;
}

json run_transport(const json& job) {
    auto a = jconnection(job.at("connection"));
    double t0 = job.value("t0", 0.0), t1 = job.value("t1", 1.0);
    MoebiusMap g = integrate_transport(a, t0, t1);
    return {{"element", moebius_json(g)}, {"abs_trace", std::abs(g.trace())}};
}

json run_holonomy(const json& job, bool rot_only) {
    auto a = jconnection(job.at("connection"));
    LiftedHolonomy h = holonomy(a);
    if (rot_only) return {{"rotation_number", h.rotation_number}};
    return {{"element", moebius_json(h.element())},
            {"rotation_number", h.rotation_number},
            {"abs_trace", std::abs(h.element().trace())},
            {"lift_const", h.lift.lift_const()},
            {"tracked_angle", h.tracked_angle},
            {"l_small_angle", fixed_points(h.element()).l_small.angle},
            {"l_big_angle", fixed_points(h.element()).l_big.angle}};
}

json run_gauge(const json& job) {
    auto a = jconnection(job.at("connection"));
    const json& prof = job.at("gauge_profile");
    // gauge path exp(f(t) g1) exp(h(t) g2) with loop/interval profiles
    LieElement g1 = jelem(prof.at("g1"), "g1");
    LieElement g2 = jelem(prof.at("g2"), "g2");
    double f1 = prof.value("rate1", 1.0), f2 = prof.value("rate2", 1.0);
    GaugePath<SU11Group> phi;
    phi.domain = a.domain;
    int n = a.node_count();
    for (int k = 0; k < n; ++k) {
        double t = a.domain == PathDomain::circle ? double(k) / n : double(k) / (n - 1);
        double s1 = a.domain == PathDomain::circle ? std::sin(kTwoPi * t) : t;
        double s2 = a.domain == PathDomain::circle ? 1.0 - std::cos(kTwoPi * t) : t * t;
        phi.samples.push_back(exp_lie(g1, f1 * s1) * exp_lie(g2, f2 * s2));
    }
    return {{"connection", connection_json(gauge_transform(phi, a))}};
}

json run_check_space(const json& job) {
    std::string space = job.at("space").get<std::string>();
    const json& d = job.at("datum");
    json out;
    if (space == "paff-interval") {
        IntervalDatumAff x{jconnection_aff(d.at("connection")), jnum(d.at("lambda0"), "l0"),
                           jnum(d.at("lambda1"), "l1")};
        out["member"] = check_paff_interval(x);
        out["margin"] = margin_paff_interval(x);
    } else if (space == "p-interval") {
        IntervalDatumLifted x{jconnection(d.at("connection")), jnum(d.at("lambda0"), "l0"),
                              jnum(d.at("lambda1"), "l1")};
        out["member"] = check_p_interval(x);
        out["margin"] = margin_p_interval(x);
    } else if (space == "ptau-circle") {
        LoopDatum x(jconnection(d.at("connection")), jnum(d.at("tau"), "tau"));
        out["member"] = check_ptau_circle(x, job.value("tol", 1e-5));
    } else if (space == "c-aff") {
        std::vector<double> labels = d.at("labels").get<std::vector<double>>();
        out["member"] = check_c_aff(labels);
        out["margin"] = margin_c_aff(labels);
    } else if (space == "c") {
        DiscBoundaryConfig c{d.at("labels").get<std::vector<double>>()};
        out["member"] = check_c(c);
        out["margin"] = margin_c(c);
    } else if (space == "c-tau") {
        PuncturedConfig c = jconfig(d);
        out["member"] = check_c_tau(c, job.value("tol", 1e-6));
        out["margin"] = margin_c_tau(c);
    } else {
        throw SchemaError("unknown space: " + space);
    }
    return out;
}

json run_construct(const json& job) {
    std::string target = job.at("target").get<std::string>();
    std::uint64_t seed = job.value("seed", 0);
    if (target == "interval") {
        auto x = construct_interval_datum(jnum(job.at("lambda0"), "lambda0"),
                                          jnum(job.at("lambda1"), "lambda1"), seed);
        json samples = json::array();
        for (const auto& s : x.connection.samples)
            samples.push_back(json::array({s.scale_rate, s.shift_rate}));
        return {{"datum",
                 {{"connection", {{"domain", "interval"}, {"samples", samples}}},
                  {"lambda0", x.lambda0},
                  {"lambda1", x.lambda1}}}};
    }
    if (target == "ptau") {
        LoopDatum x = construct_ptau_loop(jnum(job.at("tau"), "tau"), seed);
        return {{"datum", {{"connection", connection_json(x.connection)}, {"tau", x.tau}}}};
    }
    if (target == "c-tau") {
        PuncturedConfig c =
            construct_c_tau_point(job.value("d", 0), jnum(job.at("tau"), "tau"), seed);
        return {{"datum", config_json(c)}};
    }
    throw SchemaError("unknown construct target: " + target);
}

json run_sheet_index(const json& job) {
    PuncturedConfig c = jconfig(job.at("config"));
    int idx = job.contains("anchor")
                  ? sheet_index(c, LiftedPoint(jnum(job.at("anchor"), "anchor")))
                  : sheet_index(c);
    return {{"sheet_index", idx}, {"default_anchor", default_sheet_anchor(c).value}};
}

json run_schwarz_integral(const json& job) {
    cplx z = jcplx(job.at("z"), "z");
    double tol = job.value("tol", 1e-12);
    const json& prof = job.at("profile");
    cplx value;
    if (prof.is_string()) {
        std::string name = prof.get<std::string>();
        double R = job.value("truncation", 800.0);
        if (name == "cauchy") {
            value = schwarz_integral([](double x) { return 1.0 / (1.0 + x * x); }, -R, R, z,
                                     tol);
        } else if (name == "bump") {
            value = schwarz_integral(
                [](double x) {
                    return std::abs(x) >= 1.0 ? 0.0 : std::exp(-1.0 / (1.0 - x * x));
                },
                -1.0, 1.0, z, tol);
        } else {
            throw SchemaError("unknown profile: " + name);
        }
    } else {
        SampledFunction f;
        f.lo = jnum(prof.at("lo"), "lo");
        f.hi = jnum(prof.at("hi"), "hi");
        f.values = prof.at("samples").get<std::vector<double>>();
        value = schwarz_integral(f, z, tol);
    }
    return {{"value", cplx_json(value)}, {"z", cplx_json(z)}};
}

json run_solve_cr(const json& job, std::vector<cplx>* grid_out) {
    CRProblem p = jproblem(job);
    SolveResult r = solve_cr(p);
    if (grid_out) *grid_out = r.u.values;
    return {{"outcome", to_string(r.report.outcome)},
            {"residual_rms", r.report.residual_rms},
            {"iterations", r.report.iterations},
            {"stayed_inside", r.report.stayed_inside},
            {"clamped_nodes", r.report.clamped_nodes}};
}

json run_energy(const json& job) {
    const json& pj = job.at("problem");
    CRProblem p = jproblem(pj);
    GridMap u;
    u.domain = p.domain;
    u.model = p.model;
    u.values = grid_from_csv(job.at("grid_csv").get<std::string>());
    EnergyReport rep = energy_top(u, p);
    return {{"geom", rep.geom},
            {"top", rep.top},
            {"boundary_term", rep.boundary_term},
            {"convention", rep.convention}};
}

json run_beta_form(const json& job) {
    double e0 = jnum(job.at("germ_endpoint0"), "endpoint0");
    double rate = jnum(job.at("germ_endpoint_rate"), "rate");
    cplx anchor = jcplx(job.at("germ_anchor"), "anchor");
    auto family = [=](double s) { return GeodesicGerm(BoundaryPoint(e0 + rate * s), anchor); };
    std::function<LieElement(double)> a_along;
    if (job.contains("a_along")) {
        LieElement g = jelem(job.at("a_along"), "a_along");
        a_along = [g](double) { return g; };
    }
    json rows = json::array();
    for (double s : job.at("arc_positions").get<std::vector<double>>())
        for (double sig : job.at("sigmas").get<std::vector<double>>())
            rows.push_back(
                {{"arc", s}, {"sigma", sig}, {"beta", beta_form(a_along, family, s, sig)}});
    return {{"values", rows}};
}

json run_schwarz_pick(const json& job) {
    std::string which = job.at("case").get<std::string>();
    int nr = job.at("nr").get<int>();
    double h = 1.0 / nr;
    if (which == "extremal-sampled") {
        double c = job.value("c", 0.95);
        DomainSpec dom{Shape::disc, nr, 2 * nr, 1.0};
        Grid grid = make_grid(dom);
        GridMap u;
        u.domain = dom;
        u.model = Model::half_plane;
        for (auto& node : grid.nodes) {
            cplx z = c * node.z;
            u.values.push_back(cplx(0.0, 1.0) * (1.0 + z) / (1.0 - z));
        }
        return {{"max_ratio", schwarz_pick_check(u)}, {"bound", 1.0 + 5.0 * h}};
    }
    CRProblem p;
    p.model = Model::half_plane;
    p.ends = EndMode::free_ends;
    if (which == "disc-free") {
        p.domain = {Shape::disc, nr, 2 * nr, 1.0};
        p.initial_guess = [](double r, double th) {
            cplx z = std::polar(r, th);
            return cplx(0.0, 1.0) + 0.4 * z + 0.2 * cplx(0.0, 1.0) * z * z;
        };
    } else if (which == "half-disc-line") {
        p.domain = {Shape::half_disc, nr, 2 * nr, 1.0};
        p.line_lambda = [](double r, double th) { return 0.3 * r * std::sin(th); };
        p.initial_guess = [](double, double) { return cplx(0.0, 1.0); };
    } else {
        throw SchemaError("unknown schwarz-pick case: " + which);
    }
    SolveResult r = solve_cr(p);
    return {{"max_ratio", schwarz_pick_check(r.u)},
            {"bound", 1.0 + 5.0 * h},
            {"residual_rms", r.report.residual_rms}};
}

json run_cyl_bound(const json& job) {
    if (job.contains("tau")) {
        double tau = jnum(job.at("tau"), "tau");
        return {{"tau", tau}, {"L", cylinder_bound(tau)}};
    }
    double lo = job.value("tau_min", 2.05), hi = job.value("tau_max", 10.0);
    int count = job.value("count", 200);
    json taus = json::array(), values = json::array();
    for (int k = 0; k < count; ++k) {
        double t = lo + (hi - lo) * k / (count - 1);
        taus.push_back(t);
        values.push_back(cylinder_bound(t));
    }
    return {{"taus", taus}, {"values", values}};
}

json run_cyl_experiment(const json& job) {
    auto rep = cylinder_feasibility_experiment(
        jnum(job.at("tau"), "tau"), jnum(job.at("l"), "l"), job.at("seeds").get<int>(),
        job.value("seed0", 0), job.value("ns", 16), job.value("nt", 32));
    json outcomes = json::array();
    for (std::size_t k = 0; k < rep.outcomes.size(); ++k)
        outcomes.push_back(
            {{"outcome", to_string(rep.outcomes[k])}, {"residual", rep.residuals[k]}});
    return {{"tau", rep.tau},
            {"l", rep.length},
            {"bound", rep.bound},
            {"converged_interior", rep.converged_interior},
            {"escapes", rep.escapes},
            {"plateaus", rep.plateaus},
            {"per_seed", outcomes}};
}

}  // namespace

void validate_job(const json& job) {
    if (!job.is_object()) throw SchemaError("job must be a JSON object");
    if (!job.contains("command") || !job.at("command").is_string())
        throw SchemaError("job requires a \"command\" string");
    std::string cmd = job.at("command").get<std::string>();
    auto it = schemas().find(cmd);
    if (it == schemas().end()) throw SchemaError("unknown command: " + cmd);
    for (const auto& [key, value] : job.items()) {
        if (key == "command") continue;
        if (!it->second.count(key))
            throw SchemaError("unknown field \"" + key + "\" for command " + cmd);
        (void)value;
    }
    for (const auto& [field, required] : it->second)
        if (required && !job.contains(field))
            throw SchemaError("missing required field \"" + field + "\" for command " + cmd);
}

json make_envelope(const json& job) {
    return {{"command", job.at("command")},
            {"inputs_hash", inputs_hash(job)},
            {"outputs", json::object()},
            {"diagnostics", json::object()},
            {"version", kToolkitVersion}};
}

json run_job(const json& job) {
    validate_job(job);
    std::string cmd = job.at("command").get<std::string>();
    json env = make_envelope(job);
    if (cmd == "classify") env["outputs"] = run_classify(job);
    else if (cmd == "transport") env["outputs"] = run_transport(job);
    else if (cmd == "holonomy") env["outputs"] = run_holonomy(job, false);
    else if (cmd == "rotnum") env["outputs"] = run_holonomy(job, true);
    else if (cmd == "gauge") env["outputs"] = run_gauge(job);
    else if (cmd == "check-space") env["outputs"] = run_check_space(job);
    else if (cmd == "construct") env["outputs"] = run_construct(job);
    else if (cmd == "sheet-index") env["outputs"] = run_sheet_index(job);
    else if (cmd == "schwarz-integral") env["outputs"] = run_schwarz_integral(job);
    else if (cmd == "solve-cr") {
        std::vector<cplx> grid;
        env["outputs"] = run_solve_cr(job, &grid);
        env["diagnostics"]["grid_csv"] = grid_to_csv(job.at("domain"), grid);
    } else if (cmd == "energy") env["outputs"] = run_energy(job);
    else if (cmd == "beta-form") env["outputs"] = run_beta_form(job);
    else if (cmd == "schwarz-pick") env["outputs"] = run_schwarz_pick(job);
    else if (cmd == "cyl-bound") env["outputs"] = run_cyl_bound(job);
    else if (cmd == "cyl-experiment") env["outputs"] = run_cyl_experiment(job);
    else throw SchemaError("unknown command: " + cmd);
    return env;
}

void write_atomic(const std::string& path, const std::string& text) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << text;
    }
    std::filesystem::rename(tmp, target);
}

std::string grid_to_csv(const json& domain, const std::vector<cplx>& values) {
    Grid grid = make_grid(jdomain(domain));
    if (grid.nodes.size() != values.size())
        throw std::invalid_argument("grid_to_csv: size mismatch");
    std::ostringstream out;
    out << "s,t,re,im\n";
    out.precision(17);
    for (std::size_t k = 0; k < values.size(); ++k)
        out << grid.nodes[k].a << ',' << grid.nodes[k].b << ',' << values[k].real() << ','
            << values[k].imag() << '\n';
    return out.str();
}

std::vector<cplx> grid_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("s,t,re,im", 0) != 0)
        throw std::invalid_argument("grid CSV must start with the header s,t,re,im");
    std::vector<cplx> values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double s, t, re, im;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &s, &t, &re, &im) != 4)
            throw std::invalid_argument("bad grid CSV row: " + line);
        values.emplace_back(re, im);
    }
    return values;
}

}  // namespace hypcr
