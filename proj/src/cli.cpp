#include "mixsim/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "mixsim/csv.hpp"
#include "mixsim/errors.hpp"
#include "mixsim/experiment.hpp"
#include "mixsim/graph_metrics.hpp"
#include "mixsim/spec_file.hpp"
#include "mixsim/trajectory.hpp"

namespace mixsim::cli {

namespace {

// Seed precedence: explicit --seed, then the spec file's seed (compare
// only), then MIXSIM_SEED from the environment, then 0.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag,
                           const std::optional<std::uint64_t>& spec_seed) {
    if (flag) return *flag;
    if (spec_seed) return *spec_seed;
    if (const char* env = std::getenv("MIXSIM_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("MIXSIM_SEED is not an integer: " + std::string(env));
        }
    }
    return 0;
}

std::string features_csv(const GraphFeatures& f, const DegreeHistogram& hist) {
    std::string out;
    out += "vertex_count," + std::to_string(f.vertex_count) + "\n";
    out += "edge_count," + std::to_string(f.edge_count) + "\n";
    out += "diameter," + (f.diameter ? std::to_string(*f.diameter) : "") + "\n";
    out += "mean_distance," + (f.mean_distance ? format_fixed(*f.mean_distance, 3) : "") + "\n";
    out += "density," + format_fixed(f.density, 4) + "\n";
    out += "mean_clustering," + format_fixed(f.mean_clustering, 4) + "\n";
    out += "degree,count\n";
    for (const auto& [degree, count] : hist) {
        out += std::to_string(degree) + "," + std::to_string(count) + "\n";
    }
    return out;
}

std::string features_text(const GraphFeatures& f, const DegreeHistogram& hist) {
    std::string out;
    auto row = [&](const std::string& name, const std::string& value) {
        out += name;
        out.append(name.size() < 18 ? 18 - name.size() : 1, ' ');
        out += value + "\n";
    };
    row("vertex_count", std::to_string(f.vertex_count));
    row("edge_count", std::to_string(f.edge_count));
    row("diameter", f.diameter ? std::to_string(*f.diameter) : "undefined");
    row("mean_distance", f.mean_distance ? format_fixed(*f.mean_distance, 3) : "undefined");
    row("density", format_fixed(f.density, 4));
    row("mean_clustering", format_fixed(f.mean_clustering, 4));
    out += "degree histogram\n";
    for (const auto& [degree, count] : hist) {
        row("  " + std::to_string(degree), std::to_string(count));
    }
    return out;
}

struct GenArgs {
    std::string kind;
    std::size_t n = 91, branching = 9, depth = 2, count = 30, k = 4, m = 2, dim = 6;
    double p = 0.55;
    std::optional<std::uint64_t> seed;
    std::string out_path;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    NetworkSpec spec;
    spec.name = a.kind;
    spec.n = a.n;
    spec.branching = a.branching;
    spec.depth = a.depth;
    spec.count = a.count;
    spec.k = a.k;
    spec.p = a.p;
    spec.m = a.m;
    spec.dim = a.dim;
    if (a.kind == "star") spec.kind = NetworkKind::Star;
    else if (a.kind == "tree") spec.kind = NetworkKind::Tree;
    else if (a.kind == "jumpers") spec.kind = NetworkKind::Jumpers;
    else if (a.kind == "ws") spec.kind = NetworkKind::Ws;
    else if (a.kind == "ba") spec.kind = NetworkKind::Ba;
    else if (a.kind == "hypercube") spec.kind = NetworkKind::Hypercube;
    else throw std::invalid_argument("unknown kind '" + a.kind + "'");

    const Graph g = spec.build(resolve_seed(a.seed, std::nullopt));
    if (a.out_path.empty()) {
        out << edge_list_text(g);
    } else {
        save_edge_list(g, a.out_path);
        out << features_csv(graph_features(g), degree_histogram(g));
    }
    return 0;
}

struct RunArgs {
    std::string graph_source;
    double g_rate = 0.0, d_rate = 0.0;
    std::uint64_t unit = 1;
    std::uint32_t n0 = 10, steps = 100, reps = 1;
    std::optional<std::uint64_t> seed;
    std::string mode = "single-event";
    bool serial = false;
    std::string out_path, json_path, trajectory_path, trajectory_svg_path, event_log_path,
        states_path;
};

int cmd_run(const RunArgs& a, std::ostream& out) {
    const NetworkSpec net = parse_network_source(a.graph_source);
    const std::uint64_t master = resolve_seed(a.seed, std::nullopt);
    const Graph g = net.build(derive_seed(master, 0, 0, kNetTag));

    SimConfig cfg;
    cfg.g_rate = a.g_rate;
    cfg.d_rate = a.d_rate;
    cfg.unit = a.unit;
    cfg.n0 = a.n0;
    cfg.t_max = a.steps;
    if (a.mode == "single-event") cfg.mode = EventMode::SingleEvent;
    else if (a.mode == "per-vertex") cfg.mode = EventMode::PerVertex;
    else throw std::invalid_argument("mode must be single-event or per-vertex");

    const auto rs = run_repetitions(g, cfg, a.reps, master,
                                    a.serial ? Exec::Serial : Exec::Parallel);

    std::string csv = std::string(kMeasureCsvHeader) + "\n" +
                      measure_csv_row(a.graph_source, case_label(a.g_rate, a.d_rate),
                                      rs.averaged) + "\n";
    if (a.out_path.empty()) out << csv;
    else write_file(a.out_path, csv);

    // Auxiliary exports replay repetition 0 (seed = derive_seed(master, 0)).
    if (!a.trajectory_path.empty() || !a.trajectory_svg_path.empty() ||
        !a.event_log_path.empty() || !a.states_path.empty()) {
        SimConfig rep0 = cfg;
        rep0.seed = derive_seed(master, 0);
        EventLog log;
        const InfoSeries series = run(g, rep0, a.event_log_path.empty() ? nullptr : &log);
        if (!a.trajectory_path.empty()) {
            write_file(a.trajectory_path, trajectory_csv(trajectory(series)));
        }
        if (!a.trajectory_svg_path.empty()) {
            write_file(a.trajectory_svg_path,
                       trajectory_svg({trajectory(series)}, {a.graph_source}));
        }
        if (!a.event_log_path.empty()) write_file(a.event_log_path, event_log_csv(log));
        if (!a.states_path.empty()) write_file(a.states_path, info_series_csv(series));
    }
    if (!a.json_path.empty()) {
        ExperimentReport report;
        report.spec.networks = {net};
        report.spec.networks[0].name = a.graph_source;
        report.spec.cases = {{a.g_rate, a.d_rate}};
        report.spec.reps = a.reps;
        report.spec.unit = a.unit;
        report.spec.n0 = a.n0;
        report.spec.t_max = a.steps;
        report.spec.mode = cfg.mode;
        report.spec.master_seed = master;
        report.cells = {{CellResult{true, "", rs.averaged, rs.reps}}};
        write_file(a.json_path, report_json(report));
    }
    return 0;
}

struct CompareArgs {
    std::string spec_path;
    bool use_default = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint32_t> reps;
    std::string out_dir;
    bool serial = false;
};

int cmd_compare(const CompareArgs& a, std::ostream& out, std::ostream& err) {
    ExperimentSpec spec;
    std::optional<std::uint64_t> spec_seed;
    if (a.use_default) {
        spec = default_experiment(0);
    } else {
        spec = load_experiment_spec(a.spec_path);
        spec_seed = spec.master_seed;
    }
    spec.master_seed = resolve_seed(a.seed, spec_seed);
    if (a.reps) spec.reps = *a.reps;

    const ExperimentReport report =
        compare_networks(spec, a.serial ? Exec::Serial : Exec::Parallel);

    namespace fs = std::filesystem;
    fs::create_directories(a.out_dir);
    const std::string dir = a.out_dir + "/";
    write_file(dir + "measures.csv", report_measures_csv(report));
    write_file(dir + "radar.csv", report_radar_csv(report));
    write_file(dir + "report.json", report_json(report));
    for (std::size_t j = 0; j < spec.cases.size(); ++j) {
        const std::string label = case_label(spec.cases[j].g_rate, spec.cases[j].d_rate);
        write_file(dir + "radar-" + label + ".svg", report_radar_svg(report, j));
    }

    std::size_t failed = 0;
    for (std::size_t i = 0; i < spec.networks.size(); ++i) {
        for (std::size_t j = 0; j < spec.cases.size(); ++j) {
            if (!report.cells[i][j].ok) {
                ++failed;
                err << "cell failed: " << spec.networks[i].name << " "
                    << case_label(spec.cases[j].g_rate, spec.cases[j].d_rate) << ": "
                    << report.cells[i][j].error << "\n";
            }
        }
    }
    out << "cells: " << spec.networks.size() * spec.cases.size() - failed << " ok, " << failed
        << " failed; outputs in " << a.out_dir << "\n";
    return failed == 0 ? 0 : 1;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"communication simulation and society measures on organizational networks"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand(
        "gen", "generate a network and write its edge list (stdout, or --out plus a "
               "feature summary)");
    gen_cmd->add_option("kind", gen.kind, "star|tree|jumpers|ws|ba|hypercube")->required();
    gen_cmd->add_option("--n", gen.n, "vertex count (star, ws, ba)");
    gen_cmd->add_option("--branching", gen.branching, "tree branching factor");
    gen_cmd->add_option("--depth", gen.depth, "tree depth");
    gen_cmd->add_option("--count", gen.count, "jumper edge count");
    gen_cmd->add_option("--k", gen.k, "ws neighbor count (even)");
    gen_cmd->add_option("--p", gen.p, "ws rewiring probability");
    gen_cmd->add_option("--m", gen.m, "ba edges per new vertex");
    gen_cmd->add_option("--dim", gen.dim, "hypercube dimension");
    gen_cmd->add_option("--seed", gen.seed, "construction seed for jumpers/ws/ba");
    gen_cmd->add_option("--out,-o", gen.out_path, "edge-list output path");

    std::string features_path;
    bool features_pretty = false;
    auto* feat_cmd =
        app.add_subcommand("features", "print graph features and degree histogram");
    feat_cmd->add_option("graph", features_path, "edge-list file")->required();
    feat_cmd->add_flag("--pretty", features_pretty, "aligned text instead of CSV");

    RunArgs run_args;
    auto* run_cmd = app.add_subcommand(
        "run", "simulate communication and write the aggregated measures CSV");
    run_cmd->add_option("--graph", run_args.graph_source,
                        "edge-list path or inline source like star:91, ws:91,4,0.55")
        ->required();
    run_cmd->add_option("--g", run_args.g_rate, "generation rate")->required();
    run_cmd->add_option("--d", run_args.d_rate, "disappearance rate")->required();
    run_cmd->add_option("--u", run_args.unit, "information unit");
    run_cmd->add_option("--n0", run_args.n0, "initially informed vertices");
    run_cmd->add_option("--steps", run_args.steps, "steps per run");
    run_cmd->add_option("--reps", run_args.reps, "repetition count");
    run_cmd->add_option("--seed", run_args.seed, "master seed");
    run_cmd->add_option("--mode", run_args.mode, "single-event|per-vertex");
    run_cmd->add_flag("--serial", run_args.serial, "run repetitions serially");
    run_cmd->add_option("--out,-o", run_args.out_path, "measures CSV path (default stdout)");
    run_cmd->add_option("--json", run_args.json_path, "full report JSON incl. per-rep values");
    run_cmd->add_option("--trajectory", run_args.trajectory_path,
                        "polar trajectory CSV of repetition 0");
    run_cmd->add_option("--trajectory-svg", run_args.trajectory_svg_path,
                        "polar trajectory SVG of repetition 0");
    run_cmd->add_option("--event-log", run_args.event_log_path,
                        "event audit CSV of repetition 0");
    run_cmd->add_option("--states", run_args.states_path,
                        "information series CSV of repetition 0");

    CompareArgs cmp;
    auto* cmp_cmd = app.add_subcommand(
        "compare", "run the full network x case experiment matrix");
    auto* spec_opt = cmp_cmd->add_option("--spec", cmp.spec_path, "experiment spec file");
    auto* default_opt =
        cmp_cmd->add_flag("--default", cmp.use_default, "use the built-in benchmark protocol");
    spec_opt->excludes(default_opt);
    cmp_cmd->add_option("--seed", cmp.seed, "master seed (overrides the spec file)");
    cmp_cmd->add_option("--reps", cmp.reps, "repetition override");
    cmp_cmd->add_option("--out-dir", cmp.out_dir, "output directory")->required();
    cmp_cmd->add_flag("--serial", cmp.serial, "run repetitions serially");

    try {
        std::vector<const char*> argv;
        argv.push_back("mixsim");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (gen_cmd->parsed()) return cmd_gen(gen, out);
        if (feat_cmd->parsed()) {
            const Graph g = load_edge_list_file(features_path);
            const auto f = graph_features(g);
            const auto hist = degree_histogram(g);
            out << (features_pretty ? features_text(f, hist) : features_csv(f, hist));
            return 0;
        }
        if (run_cmd->parsed()) return cmd_run(run_args, out);
        if (cmp_cmd->parsed()) {
            if (!cmp.use_default && cmp.spec_path.empty()) {
                err << "error: compare needs --spec or --default\n";
                return 1;
            }
            return cmd_compare(cmp, out, err);
        }
        err << "error: no command\n";
        return 1;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace mixsim::cli
