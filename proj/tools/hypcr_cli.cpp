// Command-line surface: every subcommand assembles a JSON job, runs it
// through the job layer, and emits a deterministic result envelope.
//
// Exit codes: 0 ok, 2 schema error, 3 precondition failure,
// 4 solver nonconvergence under --strict.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "hypcr/jobspec.hpp"
#include "hypcr/svg.hpp"

using hypcr::json;

namespace {

std::string resolve_out(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("HYPCR_OUT_DIR");
    if (!dir || !*dir) return path;
    return std::string(dir) + "/" + path;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hypcr::SchemaError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw hypcr::SchemaError(std::string("JSON parse error: ") + e.what());
    }
    return j;
}

int emit(const json& envelope, const std::string& out_path, bool strict) {
    std::string text = envelope.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        hypcr::write_atomic(resolve_out(out_path), text);
    if (strict && envelope.at("outputs").contains("outcome") &&
        envelope.at("outputs").at("outcome").get<std::string>() != "converged-interior")
        return hypcr::exit_nonconvergence;
    if (strict && envelope.at("outputs").contains("converged_interior") &&
        envelope.at("outputs").at("converged_interior").get<int>() == 0 &&
        envelope.at("outputs").contains("per_seed"))
        return hypcr::exit_ok;  // experiments report outcomes as data
    return hypcr::exit_ok;
}

int run_and_emit(const json& job, const std::string& out_path, bool strict,
                 const std::string& grid_out) {
    json env = hypcr::run_job(job);
    if (!grid_out.empty()) {
        if (!env.at("diagnostics").contains("grid_csv"))
            throw std::invalid_argument("no grid payload to write");
        hypcr::write_atomic(resolve_out(grid_out),
                            env.at("diagnostics").at("grid_csv").get<std::string>());
        env["diagnostics"].erase("grid_csv");
        env["diagnostics"]["grid_path"] = grid_out;
    }
    return emit(env, out_path, strict);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperbolic isometries, flat connections and twisted CR boundary problems"};
    app.require_subcommand(1);

    std::string out_path, job_path, grid_out;
    bool strict = false;
    app.add_option("--out", out_path, "write the result envelope to this file (default stdout)");
    app.add_flag("--strict", strict, "nonzero exit when a solve does not converge");

    // generic runner
    auto* run = app.add_subcommand("run", "run a JSON job file");
    run->add_option("--job", job_path, "job file")->required();

    // classify
    auto* classify = app.add_subcommand("classify", "classify a disc isometry");
    double are = 1.0, aim = 0.0, bre = 0.0, bim = 0.0, tol = 1e-9;
    classify->add_option("--a-re", are)->required();
    classify->add_option("--a-im", aim);
    classify->add_option("--b-re", bre);
    classify->add_option("--b-im", bim);
    classify->add_option("--tol", tol);

    auto add_connection_cmd = [&](const char* name, const char* help) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("--connection", job_path, "connection JSON file")->required();
        return cmd;
    };
    auto* transport = add_connection_cmd("transport", "parallel transport over [t0, t1]");
    double t0 = 0.0, t1 = 1.0;
    transport->add_option("--t0", t0);
    transport->add_option("--t1", t1);
    auto* holonomy = add_connection_cmd("holonomy", "holonomy and natural lift of a loop");
    auto* rotnum = add_connection_cmd("rotnum", "rotation number of a loop");

    auto* gauge = app.add_subcommand("gauge", "apply a gauge transformation");
    std::string gauge_profile_path;
    gauge->add_option("--connection", job_path)->required();
    gauge->add_option("--gauge", gauge_profile_path, "gauge profile JSON")->required();

    auto* check = app.add_subcommand("check-space", "membership predicates");
    std::string space, datum_path;
    check->add_option("--space", space)->required()->check(CLI::IsMember(
        {"paff-interval", "p-interval", "ptau-circle", "c-aff", "c", "c-tau"}));
    check->add_option("--datum", datum_path, "datum JSON file")->required();

    auto* construct = app.add_subcommand("construct", "construct a member datum");
    std::string target;
    double lambda0 = 1.0, lambda1 = 0.0, tau = 3.0;
    int dpunct = 0;
    std::uint64_t seed = 0;
    construct->add_option("--target", target)
        ->required()
        ->check(CLI::IsMember({"interval", "ptau", "c-tau"}));
    construct->add_option("--lambda0", lambda0);
    construct->add_option("--lambda1", lambda1);
    construct->add_option("--tau", tau);
    construct->add_option("--d", dpunct);
    construct->add_option("--seed", seed);

    auto* sheet = app.add_subcommand("sheet-index", "sheet invariant of a punctured config");
    std::string config_path;
    double anchor = 0.0;
    bool anchor_set = false;
    sheet->add_option("--config", config_path)->required();
    sheet->add_option("--anchor", anchor)->each([&](const std::string&) { anchor_set = true; });

    auto* swint = app.add_subcommand("schwarz-integral", "evaluate the Schwarz integral");
    std::string profile = "cauchy";
    double zre = 0.0, zim = 1.0, truncation = 800.0;
    swint->add_option("--profile", profile, "cauchy | bump | samples JSON file");
    swint->add_option("--z-re", zre)->required();
    swint->add_option("--z-im", zim)->required();
    swint->add_option("--truncation", truncation);

    auto* solve = app.add_subcommand("solve-cr", "solve a twisted CR boundary problem");
    solve->add_option("--job", job_path, "problem JSON")->required();
    solve->add_option("--grid-out", grid_out, "write the solution grid CSV here");

    auto* energy = app.add_subcommand("energy", "energies of a grid map");
    std::string grid_path;
    energy->add_option("--job", job_path, "problem JSON")->required();
    energy->add_option("--grid", grid_path, "grid CSV file")->required();

    auto* beta = app.add_subcommand("beta-form", "boundary one-form along a germ family");
    beta->add_option("--job", job_path, "beta-form job JSON")->required();

    auto* pick = app.add_subcommand("schwarz-pick", "Schwarz-Pick ratio check");
    std::string pick_case = "disc-free";
    int nr = 32;
    double extremal_c = 0.95;
    pick->add_option("--case", pick_case)
        ->check(CLI::IsMember({"disc-free", "half-disc-line", "extremal-sampled"}));
    pick->add_option("--nr", nr);
    pick->add_option("--c", extremal_c);

    auto* cylb = app.add_subcommand("cyl-bound", "cylinder length bound L(tau)");
    double cb_tau = 0.0, tau_min = 2.05, tau_max = 10.0;
    int count = 0;
    cylb->add_option("--tau", cb_tau);
    cylb->add_option("--tau-min", tau_min);
    cylb->add_option("--tau-max", tau_max);
    cylb->add_option("--count", count, "sweep point count (enables the tau sweep)");

    auto* cyle = app.add_subcommand("cyl-experiment", "multi-seed cylinder feasibility runs");
    double ce_tau = 3.0, ce_l = 1.0;
    int seeds = 20, ce_ns = 16, ce_nt = 32;
    std::uint64_t seed0 = 0;
    cyle->add_option("--tau", ce_tau)->required();
    cyle->add_option("--l", ce_l)->required();
    cyle->add_option("--seeds", seeds);
    cyle->add_option("--seed0", seed0);
    cyle->add_option("--ns", ce_ns);
    cyle->add_option("--nt", ce_nt);

    auto* plot = app.add_subcommand("plot", "render a result envelope as SVG");
    std::string plot_in, plot_style = "fixed-points";
    plot->add_option("--in", plot_in, "result envelope JSON")->required();
    plot->add_option("--style", plot_style)
        ->check(CLI::IsMember({"fixed-points", "grid", "curve"}));

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return run_and_emit(load_json(job_path), out_path, strict, grid_out);
        if (classify->parsed())
            return run_and_emit({{"command", "classify"},
                                 {"a", {are, aim}},
                                 {"b", {bre, bim}},
                                 {"tol", tol}},
                                out_path, strict, "");
        if (transport->parsed())
            return run_and_emit({{"command", "transport"},
                                 {"connection", load_json(job_path)},
                                 {"t0", t0},
                                 {"t1", t1}},
                                out_path, strict, "");
        if (holonomy->parsed())
            return run_and_emit({{"command", "holonomy"}, {"connection", load_json(job_path)}},
                                out_path, strict, "");
        if (rotnum->parsed())
            return run_and_emit({{"command", "rotnum"}, {"connection", load_json(job_path)}},
                                out_path, strict, "");
        if (gauge->parsed())
            return run_and_emit({{"command", "gauge"},
                                 {"connection", load_json(job_path)},
                                 {"gauge_profile", load_json(gauge_profile_path)}},
                                out_path, strict, "");
        if (check->parsed())
            return run_and_emit(
                {{"command", "check-space"}, {"space", space}, {"datum", load_json(datum_path)}},
                out_path, strict, "");
        if (construct->parsed()) {
            json job{{"command", "construct"}, {"target", target}, {"seed", seed}};
            if (target == "interval") {
                job["lambda0"] = lambda0;
                job["lambda1"] = lambda1;
            } else {
                job["tau"] = tau;
                if (target == "c-tau") job["d"] = dpunct;
            }
            return run_and_emit(job, out_path, strict, "");
        }
        if (sheet->parsed()) {
            json job{{"command", "sheet-index"}, {"config", load_json(config_path)}};
            if (anchor_set) job["anchor"] = anchor;
            return run_and_emit(job, out_path, strict, "");
        }
        if (swint->parsed()) {
            json prof;
            if (profile == "cauchy" || profile == "bump")
                prof = profile;
            else
                prof = load_json(profile);
            return run_and_emit({{"command", "schwarz-integral"},
                                 {"profile", prof},
                                 {"z", {zre, zim}},
                                 {"truncation", truncation}},
                                out_path, strict, "");
        }
        if (solve->parsed()) {
            json job = load_json(job_path);
            job["command"] = "solve-cr";
            return run_and_emit(job, out_path, strict, grid_out);
        }
        if (energy->parsed()) {
            std::ifstream in(grid_path);
            if (!in) throw std::invalid_argument("cannot open " + grid_path);
            std::string csv((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
            return run_and_emit(
                {{"command", "energy"}, {"problem", load_json(job_path)}, {"grid_csv", csv}},
                out_path, strict, "");
        }
        if (beta->parsed()) {
            json job = load_json(job_path);
            job["command"] = "beta-form";
            return run_and_emit(job, out_path, strict, "");
        }
        if (pick->parsed()) {
            json job{{"command", "schwarz-pick"}, {"case", pick_case}, {"nr", nr}};
            if (pick_case == "extremal-sampled") job["c"] = extremal_c;
            return run_and_emit(job, out_path, strict, "");
        }
        if (cylb->parsed()) {
            json job{{"command", "cyl-bound"}};
            if (count > 0) {
                job["tau_min"] = tau_min;
                job["tau_max"] = tau_max;
                job["count"] = count;
            } else {
                job["tau"] = cb_tau;
            }
            return run_and_emit(job, out_path, strict, "");
        }
        if (cyle->parsed())
            return run_and_emit({{"command", "cyl-experiment"},
                                 {"tau", ce_tau},
                                 {"l", ce_l},
                                 {"seeds", seeds},
                                 {"seed0", seed0},
                                 {"ns", ce_ns},
                                 {"nt", ce_nt}},
                                out_path, strict, "");
        if (plot->parsed()) {
            std::string svg = hypcr::render_svg(load_json(plot_in), plot_style);
            if (out_path.empty())
                std::cout << svg;
            else
                hypcr::write_atomic(resolve_out(out_path), svg);
            return hypcr::exit_ok;
        }
    } catch (const hypcr::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return hypcr::exit_schema;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition failure: " << e.what() << "\n";
        return hypcr::exit_precondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition failure: " << e.what() << "\n";
        return hypcr::exit_precondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return hypcr::exit_precondition;
    }
    return hypcr::exit_ok;
}
