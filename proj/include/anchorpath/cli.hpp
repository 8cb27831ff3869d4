#pragma once

// Command-line front end: generate, replay, coverage, validate, models.
// run_cli() takes the output streams so tests can drive it in-process.
//
// Exit codes: 0 success, 1 validation/input-content failure, 2 usage or
// configuration error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "anchorpath/error.hpp"
#include "anchorpath/mobility.hpp"
#include "anchorpath/ns2_scenario.hpp"
#include "anchorpath/number_format.hpp"
#include "anchorpath/path_models.hpp"
#include "anchorpath/reports.hpp"
#include "anchorpath/wsn.hpp"

namespace anchorpath::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 1;
inline constexpr int exit_usage = 2;

/// Raised for bad flags or unusable paths; maps to exit_usage.
class UsageError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    std::string model = "scan";
    ModelParams params;
    std::string origin;  ///< "x,y"; empty selects the model's default origin
    double speed = 10.0;
    int total_nodes = 10;
    int anchor_id = -1;  ///< -1 selects total_nodes - 1
    double width = 550.0;
    double height = 550.0;
    std::uint64_t seed = 0;
    std::string output_dir = ".";
};

inline Point2D parse_point(const std::string& text, const std::string& flag) {
    const auto comma = text.find(',');
    Point2D p;
    if (comma == std::string::npos || !parse_double(std::string_view(text).substr(0, comma), p.x) ||
        !parse_double(std::string_view(text).substr(comma + 1), p.y) || !is_finite(p))
        throw UsageError(flag + ": expected X,Y but got '" + text + "'");
    return p;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Writes to a sibling temporary and renames it into place.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw UsageError("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw UsageError("cannot write " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw UsageError("cannot write " + path.string());
    }
}

inline std::filesystem::path prepare_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (!std::filesystem::is_directory(dir)) throw UsageError("--out: cannot create directory " + dir);
    return dir;
}

inline void check_run_config(const RunConfig& cfg) {
    const auto& p = cfg.params;
    if (p.segments < 1) throw UsageError("--segments: invalid segment count");
    if (!(p.resolution > 0.0)) throw UsageError("--resolution: invalid resolution");
    if (p.curve_level < 1) throw UsageError("--level: invalid curve level");
    if (p.curve_level > max_hilbert_level) throw UsageError("--level: curve level too large");
    if (!(p.spiral_step > 0.0)) throw UsageError("--spiral-step: invalid spiral step");
    if (!(cfg.speed > 0.0)) throw UsageError("--speed: invalid speed");
    if (cfg.total_nodes < 2) throw UsageError("--nodes: invalid node count (need at least 2)");
    if (cfg.anchor_id < -1) throw UsageError("--anchor-id: invalid anchor id");
    if (!(cfg.width > 0.0) || !(cfg.height > 0.0)) throw UsageError("--width/--height: invalid area size");
}

inline int cmd_generate(RunConfig cfg, std::ostream& out) {
    check_run_config(cfg);
    const ModelEntry* entry = ModelRegistry::builtin().find(cfg.model);
    if (!entry) {
        try {
            ModelRegistry::builtin().get(cfg.model);
        } catch (const Error& e) {
            throw UsageError(std::string("--model: ") + e.what());
        }
    }
    cfg.params.origin = cfg.origin.empty() ? entry->default_origin : parse_point(cfg.origin, "--origin");

    const Trajectory traj = entry->generate(cfg.params);
    const ModelStats stats = compute_stats(traj, cfg.speed);
    const int anchor_id = cfg.anchor_id >= 0 ? cfg.anchor_id : cfg.total_nodes - 1;
    const ScenarioFile scenario = build_commands(traj, cfg.speed, anchor_id);

    NetworkConfig net_cfg;
    net_cfg.width = cfg.width;
    net_cfg.height = cfg.height;
    net_cfg.total_nodes = cfg.total_nodes;
    net_cfg.speed = cfg.speed;
    net_cfg.seed = cfg.seed;
    Network net = deploy(net_cfg, traj.path.front());
    net.anchor.id = anchor_id;

    const auto dir = prepare_dir(cfg.output_dir);
    const std::string stats_csv = export_stats_csv(stats);
    write_file_atomic(dir / (cfg.model + "_scenario.txt"), render_scenario(scenario));
    write_file_atomic(dir / "topology.txt", render_topology(to_topology(net)));
    write_file_atomic(dir / "stats.csv", stats_csv);
    write_file_atomic(dir / "chart.csv", export_chart_csv(traj));
    write_file_atomic(dir / "trajectory.svg", export_svg(traj, &net));
    out << stats_csv;
    return exit_ok;
}

struct ReplayOptions {
    std::string scenario;
    std::string start;
    std::string topology;
    double tick = 1.0;
    std::string output_dir;  ///< empty: trace goes to stdout
};

/// Start position from --start, else the anchor tagged in --topology.
inline Point2D resolve_start(const std::string& start, const std::string& topology) {
    if (!start.empty()) return parse_point(start, "--start");
    if (!topology.empty()) {
        const auto topo = parse_topology(read_file(topology));
        if (auto a = topo.anchor()) return a->position;
        throw UsageError("--topology: no anchor entry; pass --start");
    }
    throw UsageError("--start or --topology is required to place the anchor");
}

inline int cmd_replay(const ReplayOptions& opt, std::ostream& out) {
    if (!(opt.tick > 0.0)) throw UsageError("--tick: invalid tick");
    const Point2D start = resolve_start(opt.start, opt.topology);
    std::vector<std::size_t> lines;
    const auto file = parse_scenario(read_file(opt.scenario), &lines);
    const TimedPath tp = from_scenario(file, start, lines);

    std::string trace = trace_header();
    auto it = step_iterator(tp, opt.tick);
    while (auto p = it.next()) trace += trace_row(*p);

    const std::string total = "total simulated time: " + format_shortest(tp.total_time) + " s\n";
    if (opt.output_dir.empty()) {
        out << trace << total;
    } else {
        write_file_atomic(prepare_dir(opt.output_dir) / "trace.csv", trace);
        out << total;
    }
    return exit_ok;
}

struct CoverageOptions {
    std::string scenario;
    std::string topology;
    std::string start;
    double range = 75.0;
    double interval = 5.0;
    double eps = 1e-6;
    std::string output_dir = ".";
};

inline int cmd_coverage(const CoverageOptions& opt, std::ostream& out) {
    if (!(opt.range > 0.0)) throw UsageError("--range: invalid communication range");
    if (!(opt.interval > 0.0)) throw UsageError("--interval: invalid beacon interval");
    if (!(opt.eps >= 0.0)) throw UsageError("--eps: invalid collinearity threshold");
    const auto topo = parse_topology(read_file(opt.topology));
    Point2D start;
    if (!opt.start.empty())
        start = parse_point(opt.start, "--start");
    else if (auto a = topo.anchor())
        start = a->position;
    else
        throw UsageError("--topology has no anchor entry; pass --start");

    std::vector<std::size_t> lines;
    const auto file = parse_scenario(read_file(opt.scenario), &lines);
    const TimedPath tp = from_scenario(file, start, lines);
    const auto events = beacon_schedule(tp, opt.interval);
    const auto sensors = sensors_from_topology(topo);
    const auto report = coverage_report(sensors, events, opt.range, opt.eps);

    write_file_atomic(prepare_dir(opt.output_dir) / "coverage.csv", export_coverage_csv(report));
    out << coverage_summary(report) << "\n";
    return exit_ok;
}

/// Reports every syntax, ordering and timing problem; exit 0 only if none.
inline int cmd_validate(const std::string& path, const std::string& start_text, std::ostream& out) {
    const std::optional<Point2D> start =
        start_text.empty() ? std::nullopt : std::optional<Point2D>(parse_point(start_text, "--start"));
    std::vector<std::string> problems;
    const auto cmds = parse_scenario_lines(read_file(path), problems);
    if (cmds.empty() && problems.empty()) problems.push_back("no setdest commands found");
    for (const auto& t : scenario_timing_problems(cmds, start)) problems.push_back(t.message);
    if (!problems.empty()) {
        for (const auto& p : problems) out << "ERROR " << p << "\n";
        out << problems.size() << " problem(s) in " << cmds.size() << " command(s)\n";
        return exit_invalid;
    }
    out << "OK: " << cmds.size() << " commands";
    std::optional<Point2D> leg_from;
    if (cmds.size() >= 2)
        leg_from = cmds[cmds.size() - 2].command.dest;
    else
        leg_from = start;
    if (leg_from) {
        const auto& last = cmds.back().command;
        const double total = last.time - cmds.front().command.time + distance(*leg_from, last.dest) / last.speed;
        out << ", total time " << format_shortest(total) << " s";
    }
    out << "\n";
    return exit_ok;
}

inline int cmd_models(std::ostream& out) {
    for (const auto& n : registry_list()) out << n << "\n";
    return exit_ok;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Anchor trajectory generator and NS-2 scenario toolkit", "anchorpath"};
    app.require_subcommand(1);

    RunConfig gen;
    auto* generate = app.add_subcommand("generate", "Generate a trajectory, scenario file and reports");
    generate->add_option("--model", gen.model, "Trajectory model (see `models`)")->capture_default_str();
    generate->add_option("--segments,-R", gen.params.segments, "Number of horizontal segments")->capture_default_str();
    generate->add_option("--resolution,-d", gen.params.resolution, "Trajectory resolution (m)")->capture_default_str();
    generate->add_option("--level", gen.params.curve_level, "Hilbert curve level")->capture_default_str();
    generate->add_option("--spiral-step", gen.params.spiral_step, "Spiral sampling step (m)")->capture_default_str();
    generate->add_option("--origin", gen.origin, "Lower-left corner X,Y (default per model)");
    generate->add_option("--speed", gen.speed, "Anchor mobility speed (m/s)")->capture_default_str();
    generate->add_option("--nodes", gen.total_nodes, "Total number of nodes, anchor included")->capture_default_str();
    generate->add_option("--anchor-id", gen.anchor_id, "Anchor node id (default nodes-1)");
    generate->add_option("--width", gen.width, "Monitoring area width (m)")->capture_default_str();
    generate->add_option("--height", gen.height, "Monitoring area height (m)")->capture_default_str();
    generate->add_option("--seed", gen.seed, "Seed for random sensor placement")->capture_default_str();
    generate->add_option("--out", gen.output_dir, "Output directory")->capture_default_str();

    ReplayOptions rep;
    auto* replay = app.add_subcommand("replay", "Replay a scenario file at a fixed tick");
    replay->add_option("scenario", rep.scenario, "Scenario file")->required();
    replay->add_option("--start", rep.start, "Anchor start X,Y");
    replay->add_option("--topology", rep.topology, "Topology file providing the anchor start");
    replay->add_option("--tick", rep.tick, "Snapshot interval (s)")->capture_default_str();
    replay->add_option("--out", rep.output_dir, "Write trace.csv here instead of stdout");

    CoverageOptions cov;
    auto* coverage = app.add_subcommand("coverage", "Beacon coverage and localizability per sensor");
    coverage->add_option("--scenario", cov.scenario, "Scenario file")->required();
    coverage->add_option("--topology", cov.topology, "Topology file")->required();
    coverage->add_option("--start", cov.start, "Anchor start X,Y (default: topology anchor)");
    coverage->add_option("--range", cov.range, "Communication range (m)")->capture_default_str();
    coverage->add_option("--interval", cov.interval, "Beacon interval (s)")->capture_default_str();
    coverage->add_option("--eps", cov.eps, "Collinearity area threshold (m^2)")->capture_default_str();
    coverage->add_option("--out", cov.output_dir, "Output directory")->capture_default_str();

    std::string val_path, val_start;
    auto* validate = app.add_subcommand("validate", "Check a scenario file for syntax and timing problems");
    validate->add_option("scenario", val_path, "Scenario file")->required();
    validate->add_option("--start", val_start, "Anchor start X,Y (enables first-leg timing check)");

    auto* models = app.add_subcommand("models", "List available trajectory models");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*generate) return cmd_generate(gen, out);
        if (*replay) return cmd_replay(rep, out);
        if (*coverage) return cmd_coverage(cov, out);
        if (*validate) return cmd_validate(val_path, val_start, out);
        if (*models) return cmd_models(out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_usage;
}

}  // namespace anchorpath::cli
