#pragma once

// Command-line front end. run() takes the argument vector and output
// streams so tests can drive it without spawning processes.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include <CLI11.hpp>

#include "kuramoto/kuramoto.hpp"

namespace kuramoto::cli {

enum ExitCode : int {
    Ok = 0,
    CheckFailed = 1,
    IoFailure = 2,
    InvalidInput = 3,
    IntegrationFailure = 4,
};

inline int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::IoError: return IoFailure;
    case ErrorCode::StepUnderflow:
    case ErrorCode::NonFiniteState: return IntegrationFailure;
    default: return InvalidInput;
    }
}

struct Source {
    Graph graph;
    std::optional<VertexPartition> partition;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Writes to path.tmp.<pid> and renames over path, so a failed run never
/// leaves a partial file behind.
inline void write_file_atomic(const std::string& path, const std::string& content) {
    const auto tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp);
        out << content;
        out.flush();
        if (!out) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw Error(ErrorCode::IoError, "write failed for " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(ErrorCode::IoError, "cannot rename onto " + path);
    }
}

inline std::size_t parse_size_arg(const std::string& name, const std::string& text) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != text.size() || text.empty() || text[0] == '-')
        throw Error(ErrorCode::BadParameter, "builtin " + name + " needs a non-negative integer, got \"" + text + "\"");
    return static_cast<std::size_t>(value);
}

/// linear:<p>, latoro, kura-eg, star:<leaves>, cycle:<n>, complete:<n>,
/// path:<n>, petersen. Builtins with a natural partition carry it.
inline Source builtin_source(const std::string& name_arg) {
    const auto colon = name_arg.find(':');
    const auto name = name_arg.substr(0, colon);
    const auto arg = colon == std::string::npos ? std::string{} : name_arg.substr(colon + 1);
    const auto need_arg = [&] {
        if (arg.empty()) throw Error(ErrorCode::BadParameter, "builtin " + name + " needs a size, e.g. " + name + ":4");
        return parse_size_arg(name, arg);
    };
    if (name == "linear") {
        auto gp = linear_family_graph(static_cast<int>(need_arg()));
        return {std::move(gp.graph), std::move(gp.partition)};
    }
    if (name == "latoro") {
        auto gp = latoro_profile_graph();
        return {std::move(gp.graph), std::move(gp.partition)};
    }
    if (name == "kura-eg") {
        auto gp = boundary_profile_graph();
        return {std::move(gp.graph), std::move(gp.partition)};
    }
    if (name == "star") {
        const auto leaves = need_arg();
        auto g = star_graph(leaves);
        std::vector<std::size_t> assignment(leaves + 1, 1);
        assignment[0] = 0;
        return {std::move(g), VertexPartition::from_assignment(assignment)};
    }
    if (name == "cycle") return {cycle_graph(need_arg()), std::nullopt};
    if (name == "complete") return {complete_graph(need_arg()), std::nullopt};
    if (name == "path") return {path_graph(need_arg()), std::nullopt};
    if (name == "petersen") return {petersen_graph(), std::nullopt};
    throw Error(ErrorCode::BadParameter, "unknown builtin \"" + name_arg + "\"");
}

struct GraphArgs {
    std::string graph_path;
    std::string builtin;
    std::string partition_path;

    void add_to(CLI::App& app) {
        auto* g = app.add_option("--graph", graph_path, "Edge-list file (1-indexed \"u v\" lines)");
        auto* b = app.add_option("--builtin", builtin,
                                 "Builtin graph: linear:<p>, latoro, kura-eg, star:<leaves>, cycle:<n>, "
                                 "complete:<n>, path:<n>, petersen");
        g->excludes(b);
        app.add_option("--partition", partition_path, "Partition file {\"blocks\": [[...], ...]}");
    }

    Source load() const {
        Source src = [&] {
            if (!builtin.empty()) return builtin_source(builtin);
            if (graph_path.empty()) throw Error(ErrorCode::BadParameter, "one of --graph or --builtin is required");
            return Source{parse_edge_list(read_file(graph_path)), std::nullopt};
        }();
        if (!partition_path.empty()) src.partition = parse_partition(read_file(partition_path), src.graph.size());
        return src;
    }
};

/// 53 random bits per draw, mapped to [0, 2 pi). Generator: std::mt19937_64,
/// whose output sequence is fixed by the C++ standard.
inline PhaseState random_phases(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    PhaseState theta(n);
    for (auto& x : theta) x = 2 * std::numbers::pi * (static_cast<double>(engine() >> 11) * 0x1.0p-53);
    return theta;
}

inline std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        double x = 0.0;
        try {
            x = std::stod(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != item.size()) throw Error(ErrorCode::BadParameter, "not a number: \"" + item + "\"");
        out.push_back(x);
    }
    return out;
}

inline void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty())
        out << content;
    else
        write_file_atomic(path, content);
}

struct SimulateArgs {
    GraphArgs source;
    std::optional<double> alpha;
    bool alpha_from_cert = false;
    double omega = 0.0;
    double lambda = 1.0;
    std::string method = "rk45";
    std::optional<double> dt;
    double rel_tol = 1e-9;
    double abs_tol = 1e-11;
    double t_end = 10.0;
    std::size_t record_every = 1;
    double sample_dt = 0.0;
    std::optional<double> init_equal;
    std::string init_blocks;
    bool init_random = false;
    std::optional<std::uint64_t> seed;
    bool init_cert = false;
    double sync_tol = 1e-8;
    double asymptotic_tol = 1e-4;
    double tail_fraction = 0.2;
    std::string out_path;
    std::string report_path;
};

inline int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
    const auto src = a.source.load();
    const auto& g = src.graph;

    IntegratorConfig cfg;
    if (a.method == "rk4")
        cfg.method = Method::Rk4;
    else if (a.method != "rk45")
        throw Error(ErrorCode::BadParameter, "--method must be rk4 or rk45");
    if (a.dt) {
        if (cfg.method != Method::Rk4) throw Error(ErrorCode::BadParameter, "--dt requires --method rk4");
        cfg.dt = *a.dt;
    } else if (cfg.method == Method::Rk4) {
        cfg.dt = 1e-3;
    }
    cfg.rel_tol = a.rel_tol;
    cfg.abs_tol = a.abs_tol;
    cfg.t_end = a.t_end;
    cfg.record_every = a.record_every;
    cfg.sample_dt = a.sample_dt;

    const int init_modes = (a.init_equal ? 1 : 0) + (a.init_blocks.empty() ? 0 : 1) + (a.init_random ? 1 : 0) +
                           (a.init_cert ? 1 : 0);
    if (init_modes != 1)
        throw Error(ErrorCode::BadParameter,
                    "choose exactly one of --init-equal, --init-blocks, --init-random, --init-cert");
    if (a.init_random != a.seed.has_value())
        throw Error(ErrorCode::BadParameter, "--init-random and --seed go together");

    std::optional<BipartitionAnalysis> analysis;
    if (a.init_cert || a.alpha_from_cert) {
        if (!src.partition) throw Error(ErrorCode::BadParameter, "certificate needs a partition");
        analysis = classify_bipartition(g, *src.partition);
        if (!has_closed_form(*analysis))
            throw Error(ErrorCode::NoCertificate, std::string("partition is ") + to_string(analysis->classification) +
                                                      "; no closed-form certificate");
    }

    ModelParams params{0.0, a.omega, a.lambda};
    if (a.alpha)
        params.alpha = *a.alpha;
    else if (analysis)
        params.alpha = analysis->certificate->alpha;
    else
        throw Error(ErrorCode::BadParameter, "--alpha is required (or use --alpha-from-cert)");
    params.validate();

    PhaseState init;
    if (a.init_equal) {
        init.assign(g.size(), *a.init_equal);
    } else if (!a.init_blocks.empty()) {
        if (!src.partition) throw Error(ErrorCode::BadParameter, "--init-blocks needs a partition");
        const auto values = parse_real_list(a.init_blocks);
        if (values.size() != src.partition->block_count())
            throw Error(ErrorCode::BadParameter, "--init-blocks needs one value per block (" +
                                                     std::to_string(src.partition->block_count()) + ")");
        init.resize(g.size());
        for (std::size_t v = 0; v < g.size(); ++v) init[v] = values[src.partition->block_of(v)];
    } else if (a.init_random) {
        init = random_phases(g.size(), *a.seed);
    } else {
        init = certificate_to_solution(*analysis, 0.0, a.omega, a.lambda).initial();
    }

    const auto traj = integrate(g, init, params, cfg);

    std::ostringstream csv;
    write_trajectory_csv(csv, traj);

    ordered_json report;
    report["alpha"] = params.alpha;
    report["alpha_at_boundary"] = params.alpha_at_boundary();
    report["points"] = traj.size();
    try {
        report["sync"] = sync_report_json(asymptotic_sync_clusters(traj, a.tail_fraction, a.asymptotic_tol, a.sync_tol));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TooShort) throw;
        auto exact = exact_sync_detail(traj, a.sync_tol);
        report["sync"] = {{"exact_partition", exact.partition.labels()}, {"asymptotic", nullptr}};
    }
    if (analysis) report["certificate"] = certificate_report(g, *analysis);

    emit(a.out_path, csv.str(), out);
    if (!a.report_path.empty())
        write_file_atomic(a.report_path, report.dump(2) + "\n");
    else if (!a.out_path.empty())
        out << report.dump(2) << "\n";
    return Ok;
}

struct AnalyzeArgs {
    GraphArgs source;
    std::string out_path;
};

inline int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
    const auto src = a.source.load();
    if (!src.partition) throw Error(ErrorCode::BadParameter, "analyze needs --partition (or a builtin with one)");
    ordered_json report;
    if (src.partition->block_count() == 2)
        report = certificate_report(src.graph, classify_bipartition(src.graph, *src.partition));
    else
        report = quotient_report(*src.partition, is_equitable(src.graph, *src.partition));
    emit(a.out_path, report.dump(2) + "\n", out);
    return Ok;
}

struct SearchArgs {
    GraphArgs source;
    std::size_t jobs = 0;
    bool force = false;
    std::size_t cap = 22;
    std::string out_path;
};

/// One compact JSON certificate report per bipartition, in canonical
/// order, then a summary line.
inline int cmd_search(const SearchArgs& a, std::ostream& out) {
    const auto src = a.source.load();
    SearchOptions options;
    options.jobs = a.jobs;
    options.force = a.force;
    options.max_vertices = a.cap;
    std::ostringstream lines;
    const auto summary = search_all_bipartitions(src.graph, options, [&](std::uint64_t, const BipartitionAnalysis& row) {
        lines << certificate_report(src.graph, row).dump() << '\n';
    });
    lines << search_summary_json(summary).dump() << '\n';
    emit(a.out_path, lines.str(), out);
    return Ok;
}

struct VerifyArgs {
    std::string example = "all";
    int p = 4;
    std::size_t d = 3;
    double alpha = 0.5;
};

namespace detail {

struct CheckLine {
    bool pass = true;
    std::string text;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            text += " FAILED(" + what + ")";
        }
    }
    void note(const std::string& s) { text += " " + s; }
};

inline double linear_alpha_reference(int p) {
    const double q = p;
    return std::atan(std::sqrt(3 * q * q - 4 * q - 4) / (q - 2));
}

inline CheckLine verify_condition2_example(const std::string& label, const GraphWithPartition& gp,
                                           const Rational& mu1, const Rational& mu2, const Rational& r,
                                           Classification expected, std::optional<double> alpha_expected,
                                           std::optional<double> offset_expected) {
    CheckLine line{true, label};
    const auto analysis = classify_bipartition(gp.graph, gp.partition);
    line.note(std::string("classification=") + to_string(analysis.classification));
    line.require(analysis.classification == expected, std::string("expected ") + to_string(expected));
    if (!analysis.certificate) {
        line.require(false, "no certificate");
        return line;
    }
    const auto& cert = *analysis.certificate;
    line.note("mu1=" + to_fraction_string(cert.mu1) + " mu2=" + to_fraction_string(cert.mu2) +
              " r=" + to_fraction_string(cert.r));
    line.require(cert.mu1 == mu1 && cert.mu2 == mu2 && cert.r == r,
                 "expected mu=(" + to_fraction_string(mu1) + "," + to_fraction_string(mu2) + "," +
                     to_fraction_string(r) + ")");
    line.note("alpha=" + format_real(cert.alpha) + " beta=" + format_real(cert.beta) +
              " offset=" + format_real(cert.offset));
    if (alpha_expected) line.require(std::abs(cert.alpha - *alpha_expected) <= 1e-12, "alpha");
    if (offset_expected) line.require(std::abs(cert.offset - *offset_expected) <= 1e-12, "offset");
    if (has_closed_form(analysis)) {
        const double residual = verify_certificate(gp.graph, analysis, 0.0, default_verification_grid());
        line.note("residual=" + format_real(residual));
        line.require(residual <= certificate_residual_limit, "residual > 1e-9");
    } else {
        line.require(false, "no closed form");
    }
    return line;
}

inline CheckLine verify_regular(std::size_t d, double alpha) {
    CheckLine line{true, "regular d=" + std::to_string(d) + " alpha=" + format_real(alpha) + " graph=K" +
                             std::to_string(d + 1)};
    const auto g = complete_graph(d + 1);
    const ModelParams params{alpha};
    const auto grid = uniform_grid(0.0, 10.0, 100);
    const auto analytic = regular_solution(d, g.size(), params);
    const double residual = residual_max(g, analytic, params, grid);
    line.note("residual=" + format_real(residual));
    line.require(residual <= 1e-14, "analytic residual > 1e-14");
    IntegratorConfig cfg;
    cfg.t_end = 10.0;
    cfg.sample_dt = 0.1;
    const auto traj = integrate(g, PhaseState(g.size(), 0.0), params, cfg);
    const double deviation = max_abs_difference(traj, analytic.sample(traj.times));
    line.note("numeric_deviation=" + format_real(deviation));
    line.require(deviation <= 1e-8, "numeric deviation > 1e-8");
    return line;
}

} // namespace detail

inline int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    std::vector<detail::CheckLine> lines;
    const bool all = a.example == "all";
    bool matched = all;
    if (all || a.example == "linear") {
        matched = true;
        const std::vector<int> ps = all ? std::vector<int>{4, 6, 8} : std::vector<int>{a.p};
        for (int p : ps) {
            lines.push_back(detail::verify_condition2_example(
                "linear p=" + std::to_string(p), linear_family_graph(p), Rational(-2, p), Rational(-1), Rational(-2),
                Classification::Condition2Unique, detail::linear_alpha_reference(p),
                std::acos((p + 2.0) / (2.0 * p))));
        }
    }
    if (all || a.example == "latoro") {
        matched = true;
        lines.push_back(detail::verify_condition2_example(
            "latoro", latoro_profile_graph(), Rational(-1, 2), Rational(-1), Rational(-2),
            Classification::Condition2Unique, std::atan(std::sqrt(7.0)), std::acos(0.75)));
    }
    if (all || a.example == "kura-eg") {
        matched = true;
        auto line = detail::verify_condition2_example("kura-eg", boundary_profile_graph(), Rational(1, 2),
                                                      Rational(1, 2), Rational(0), Classification::Boundary,
                                                      std::numbers::pi / 2, 2 * std::numbers::pi / 3);
        const auto analysis = classify_bipartition(boundary_profile_graph().graph, boundary_profile_graph().partition);
        if (analysis.certificate) {
            line.require(analysis.certificate->boundary == BoundaryKind::EqualMu, "boundary flag");
            line.require(std::abs(analysis.certificate->beta - std::numbers::pi / 6) <= 1e-12, "beta");
        }
        lines.push_back(std::move(line));
    }
    if (all || a.example == "regular") {
        matched = true;
        lines.push_back(detail::verify_regular(a.d, a.alpha));
    }
    if (!matched) throw Error(ErrorCode::BadParameter, "unknown example \"" + a.example + "\"");
    bool ok = true;
    for (const auto& line : lines) {
        out << (line.pass ? "PASS " : "FAIL ") << line.text << '\n';
        ok = ok && line.pass;
    }
    return ok ? Ok : CheckFailed;
}

/// Parses args (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Frustrated Kuramoto model on graphs: simulation, equitable partitions, bipartition certificates"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Integrate the model and report synchronisation");
    sim.source.add_to(*simulate);
    simulate->add_option("--alpha", sim.alpha, "Phase frustration in radians, (0, pi/2]");
    simulate->add_flag("--alpha-from-cert", sim.alpha_from_cert, "Take alpha from the partition's certificate");
    simulate->add_option("--omega", sim.omega, "Natural frequency")->capture_default_str();
    simulate->add_option("--lambda", sim.lambda, "Coupling strength")->capture_default_str();
    simulate->add_option("--method", sim.method, "rk4 or rk45")->capture_default_str();
    simulate->add_option("--dt", sim.dt, "Fixed step (rk4 only)");
    simulate->add_option("--rel-tol", sim.rel_tol)->capture_default_str();
    simulate->add_option("--abs-tol", sim.abs_tol)->capture_default_str();
    simulate->add_option("--t-end", sim.t_end)->capture_default_str();
    simulate->add_option("--record-every", sim.record_every)->capture_default_str();
    simulate->add_option("--sample-dt", sim.sample_dt, "rk45: record at multiples of this step");
    simulate->add_option("--init-equal", sim.init_equal, "All phases equal to this value");
    simulate->add_option("--init-blocks", sim.init_blocks, "Comma-separated phase per partition block");
    simulate->add_flag("--init-random", sim.init_random, "Uniform phases in [0, 2 pi) from --seed");
    simulate->add_option("--seed", sim.seed, "Seed for --init-random (mt19937_64)");
    simulate->add_flag("--init-cert", sim.init_cert, "Closed-form initial condition of the certificate (c = 0)");
    simulate->add_option("--sync-tol", sim.sync_tol)->capture_default_str();
    simulate->add_option("--asymptotic-tol", sim.asymptotic_tol)->capture_default_str();
    simulate->add_option("--tail-fraction", sim.tail_fraction)->capture_default_str();
    simulate->add_option("--out", sim.out_path, "Trajectory CSV (stdout when omitted)");
    simulate->add_option("--report", sim.report_path, "Synchronisation report JSON");

    AnalyzeArgs ana;
    auto* analyze = app.add_subcommand("analyze", "Classify a bipartition, or test a partition for equitability");
    ana.source.add_to(*analyze);
    analyze->add_option("--out", ana.out_path, "Report path (stdout when omitted)");

    SearchArgs sea;
    auto* search = app.add_subcommand("search", "Classify every bipartition of a graph");
    sea.source.add_to(*search);
    search->add_option("--jobs", sea.jobs, "Worker threads (0 = all cores)")->capture_default_str();
    search->add_flag("--force", sea.force, "Allow graphs above the vertex cap");
    search->add_option("--cap", sea.cap, "Vertex cap")->capture_default_str();
    search->add_option("--out", sea.out_path, "Report path (stdout when omitted)");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Check the bundled examples");
    verify->add_option("--example", ver.example, "linear, latoro, kura-eg, regular or all")->capture_default_str();
    verify->add_option("--p", ver.p, "Linear family parameter")->capture_default_str();
    verify->add_option("--d", ver.d, "Regular degree (graph K_{d+1})")->capture_default_str();
    verify->add_option("--alpha", ver.alpha, "Alpha for the regular example")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return InvalidInput;
    }

    try {
        if (*simulate) return cmd_simulate(sim, out);
        if (*analyze) return cmd_analyze(ana, out);
        if (*search) return cmd_search(sea, out);
        if (*verify) return cmd_verify(ver, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return InvalidInput;
    }
    return InvalidInput;
}

} // namespace kuramoto::cli
