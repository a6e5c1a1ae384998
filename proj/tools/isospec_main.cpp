// Command-line front end: certify isospectral pairs, run deformation flows,
// and emit curvature/heat reports as JSON and CSV.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "isospec/catalog.hpp"
#include "isospec/curvature.hpp"
#include "isospec/flow.hpp"
#include "isospec/heat.hpp"
#include "isospec/invariants.hpp"
#include "isospec/serialize.hpp"

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr const char* kSchema = "isospec/1";

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDiverged = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Catalog addresses have the form "id" or "id@t=<value>" with ids
// ex2.5, ex4.3 (parameter t) and lemma4.2 (no parameters).
isospec::SkewPencil resolve_catalog(const std::string& address) {
    std::string id = address;
    std::optional<double> t;
    if (const auto at = address.find('@'); at != std::string::npos) {
        id = address.substr(0, at);
        const std::string param = address.substr(at + 1);
        const auto eq = param.find('=');
        if (eq == std::string::npos) {
            throw InputError("malformed catalog parameter '" + param + "', expected t=<value>");
        }
        if (param.substr(0, eq) != "t") {
            throw InputError("unknown catalog parameter '" + param.substr(0, eq) + "'");
        }
        std::size_t used = 0;
        const std::string value = param.substr(eq + 1);
        try {
            t = std::stod(value, &used);
        } catch (const std::exception&) {
            throw InputError("cannot parse catalog parameter value '" + value + "'");
        }
        if (used != value.size()) {
            throw InputError("trailing characters in catalog parameter value '" + value + "'");
        }
    }

    if (id == "lemma4.2") {
        if (t) {
            throw InputError("catalog entry lemma4.2 takes no parameters");
        }
        return isospec::catalog::make_lemma42();
    }
    if (id == "ex4.3") {
        return isospec::catalog::make_ex43(t.value_or(0.0));
    }
    if (id == "ex2.5") {
        return isospec::catalog::make_ex25(isospec::catalog::Ex25Params{}, t.value_or(0.0)).j_t;
    }
    throw InputError("unknown catalog id '" + id + "' (known: ex2.5, ex4.3, lemma4.2)");
}

isospec::SkewPencil resolve_source(const std::string& input_path, const std::string& catalog_id,
                                   const char* which) {
    if (!input_path.empty() && !catalog_id.empty()) {
        throw InputError(std::string("give either an input file or a catalog id for the ") + which +
                         " pencil, not both");
    }
    if (!input_path.empty()) {
        return isospec::pencil_from_json_file(input_path);
    }
    if (!catalog_id.empty()) {
        return resolve_catalog(catalog_id);
    }
    throw InputError(std::string("no source given for the ") + which + " pencil");
}

void write_text(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write '" + path.string() + "'");
    }
    out << text;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct CommonOptions {
    std::string input;
    std::string catalog;
    std::string input2;
    std::string catalog2;
    std::string base = "su2xsu2-unit";
    std::string out_dir;
    double tol_iso = isospec::kDefaultIsoTol;
    double tol_verdict = isospec::kDefaultVerdictTol;
    double t_end = 0.1;
    double dt = 1e-3;
    double drift_bound = 1e-8;
    long samples = 0;
    std::uint64_t seed = 42;
    bool dump_states = false;
};

void emit(const CommonOptions& opts, const std::string& filename, const std::string& text) {
    std::cout << text << "\n";
    if (!opts.out_dir.empty()) {
        write_text(fs::path(opts.out_dir) / filename, text + "\n");
    }
}

int run_certify(const CommonOptions& opts) {
    const isospec::SkewPencil j = resolve_source(opts.input, opts.catalog, "first");
    const isospec::SkewPencil j2 = resolve_source(opts.input2, opts.catalog2, "second");
    const isospec::BaseGroupData base = isospec::catalog::base_preset(opts.base);

    const isospec::IsospectralReport iso = isospec::is_isospectral(j, j2, opts.tol_iso);

    json report;
    report["schema"] = kSchema;
    report["command"] = "certify";
    report["m"] = j.dim();
    report["tol_iso"] = opts.tol_iso;
    report["tol_verdict"] = opts.tol_verdict;
    report["isospectral"] = iso.isospectral;
    report["max_deviation"] = iso.max_deviation;
    report["worst_key"] = {{"a", iso.worst_a}, {"b", iso.worst_b}};

    if (iso.isospectral) {
        const auto verdict = isospec::nonisometry_verdict(j, j2, opts.tol_verdict, opts.tol_iso);
        report["nonisometry"] = isospec::to_string(verdict);
        const isospec::HeatComparison cmp =
            isospec::heat_comparison(j, j2, base, opts.tol_verdict, opts.tol_iso);
        report["heat"] = json::parse(isospec::to_json(cmp));
        report["base"] = opts.base;
    } else {
        report["nonisometry"] = nullptr;
        report["heat"] = nullptr;
        report["base"] = opts.base;
    }

    emit(opts, "certify.json", report.dump(2));
    return kExitOk;
}

int run_flow(const CommonOptions& opts) {
    const isospec::SkewPencil j0 = resolve_source(opts.input, opts.catalog, "first");
    if (!(opts.dt > 0.0)) {
        throw InputError("dt must be positive");
    }

    const isospec::FlowTrajectory traj =
        isospec::integrate_flow(j0, opts.t_end, opts.dt, opts.drift_bound);

    std::string csv = "t,q,ric_norm_sq,max_drift\n";
    for (const auto& s : traj.states) {
        csv += format_double(s.t) + "," + format_double(s.q) + "," + format_double(s.ric_norm_sq) +
               "," + format_double(s.max_drift) + "\n";
    }
    std::cout << csv;
    if (!opts.out_dir.empty()) {
        write_text(fs::path(opts.out_dir) / "trajectory.csv", csv);
        if (opts.dump_states) {
            int idx = 0;
            for (const auto& s : traj.states) {
                char name[32];
                std::snprintf(name, sizeof(name), "state_%05d.json", idx++);
                write_text(fs::path(opts.out_dir) / name, isospec::to_json(s.j) + "\n");
            }
        }
    }

    json summary;
    summary["schema"] = kSchema;
    summary["command"] = "flow";
    summary["m"] = j0.dim();
    summary["generic"] = isospec::genericity_check(j0);
    summary["degraded"] = traj.degraded;
    summary["max_drift"] = traj.max_drift;
    summary["drift_bound"] = traj.drift_bound;
    summary["t_end"] = opts.t_end;
    summary["dt"] = opts.dt;
    summary["states"] = traj.states.size();
    summary["method"] = "RK4";
    summary["q_start"] = traj.initial().q;
    summary["q_end"] = traj.final_state().q;
    summary["ric_norm_sq_start"] = traj.initial().ric_norm_sq;
    summary["ric_norm_sq_end"] = traj.final_state().ric_norm_sq;
    emit(opts, "flow_summary.json", summary.dump(2));
    return kExitOk;
}

int run_report(const CommonOptions& opts) {
    const isospec::SkewPencil j = resolve_source(opts.input, opts.catalog, "first");
    const isospec::BaseGroupData base = isospec::catalog::base_preset(opts.base);

    const isospec::CurvatureReport curvature = isospec::curvature_report(j, base);

    json report;
    report["schema"] = kSchema;
    report["command"] = "report";
    report["m"] = j.dim();
    report["base"] = opts.base;
    report["curvature"] = json::parse(isospec::to_json(curvature));
    report["c_s"] = isospec::c_s_exact(j, base);
    report["total_scal_integral"] = isospec::total_scal_integral(j, base);
    if (opts.samples > 0) {
        const isospec::QuadratureResult quad =
            isospec::c_ric_quadrature(j, base, opts.samples, opts.seed);
        json q;
        q["value"] = quad.value;
        q["std_error"] = quad.std_error;
        q["samples"] = quad.samples;
        q["seed"] = quad.seed;
        report["c_ric_quadrature"] = std::move(q);
    } else {
        report["c_ric_quadrature"] = nullptr;
    }

    emit(opts, "report.json", report.dump(2));
    return kExitOk;
}

void add_source_options(CLI::App* cmd, CommonOptions& opts, bool two_sources) {
    cmd->add_option("--input", opts.input, "Path to a pencil JSON file");
    cmd->add_option("--catalog", opts.catalog, "Catalog id (ex2.5, ex4.3, lemma4.2), optionally id@t=<value>");
    if (two_sources) {
        cmd->add_option("--input2", opts.input2, "Path to the second pencil JSON file");
        cmd->add_option("--catalog2", opts.catalog2, "Catalog id of the second pencil");
    }
    cmd->add_option("--out", opts.out_dir, "Directory for output artifacts");
    cmd->add_option("--base", opts.base, "Base group preset name")->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"isospectral pencil laboratory: certification, deformation flows, curvature reports"};
    app.require_subcommand(1);

    CommonOptions opts;

    CLI::App* certify = app.add_subcommand("certify", "Compare two pencils: isospectrality, nonisometry, heat invariants");
    add_source_options(certify, opts, true);
    certify->add_option("--tol-iso", opts.tol_iso, "Relative tolerance for the isospectrality predicate")
        ->capture_default_str();
    certify->add_option("--tol-verdict", opts.tol_verdict, "Tolerance for nonisometry/one-form verdicts")
        ->capture_default_str();

    CLI::App* flow = app.add_subcommand("flow", "Integrate the invariant-preserving deformation flow");
    add_source_options(flow, opts, false);
    flow->add_option("--t-end", opts.t_end, "Flow endpoint (negative runs backwards)")->capture_default_str();
    flow->add_option("--dt", opts.dt, "RK4 step size")->capture_default_str();
    flow->add_option("--drift-bound", opts.drift_bound, "Invariant drift above which the trajectory is degraded")
        ->capture_default_str();
    flow->add_flag("--dump-states", opts.dump_states, "Write one pencil JSON per stored state");

    CLI::App* report = app.add_subcommand("report", "Curvature and heat report for one pencil");
    add_source_options(report, opts, false);
    report->add_option("--samples", opts.samples, "Monte-Carlo samples for the Ricci-norm integral (0 = skip)")
        ->capture_default_str();
    report->add_option("--seed", opts.seed, "Quadrature seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (app.got_subcommand(certify)) {
            return run_certify(opts);
        }
        if (app.got_subcommand(flow)) {
            return run_flow(opts);
        }
        return run_report(opts);
    } catch (const isospec::DivergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDiverged;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const isospec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
