#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>

#include "degseq/bench.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/edgeswap.hpp"
#include "degseq/error.hpp"
#include "degseq/generator.hpp"
#include "degseq/graph.hpp"
#include "degseq/graphicality.hpp"
#include "degseq/metrics.hpp"
#include "degseq/synth.hpp"

namespace degseq::cli {

namespace {

struct RunConfig {
    std::string input;
    std::uint64_t seed = 0;
    int workers = default_workers();
    std::string mode = "seq";
    std::string out_path;
    std::string record_path;
    std::string hist_path;
    std::vector<std::string> skip;
    std::optional<std::uint64_t> swaps;
    std::string worker_list;
    int reps = kMinBenchRepetitions;
    bool header = false;
    bool verbose = false;
    bool no_shortcut = false;

    // synth
    std::string kind;
    std::size_t n = 0;
    double gamma = 2.5;
    Degree dmax = 0;
    Degree degree = 0;
};

Mode parse_mode(const std::string& mode) {
    return mode == "par" ? Mode::parallel : Mode::sequential;
}

std::vector<int> parse_worker_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) {
        for (int w = 1; w <= default_workers(); w *= 2) out.push_back(w);
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int w = std::stoi(item, &used);
            if (used != item.size() || w < 1) throw std::invalid_argument(item);
            out.push_back(w);
        } catch (const std::exception&) {
            throw Error(ErrorCode::invalid_argument, "bad worker count '" + item + "'");
        }
    }
    return out;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_text_file(path, text);
    }
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    const std::vector<Degree> degrees = parse_degrees(read_text_file(cfg.input));
    const EgOptions options{parse_mode(cfg.mode), cfg.workers};
    const GraphicalityReport report = check_graphical(degrees, options);
    out << (report.graphical ? "graphical" : "not graphical") << " n=" << degrees.size() << "\n";
    if (cfg.verbose) {
        out << "parity_ok " << (report.parity_ok ? "true" : "false") << "\n";
        out << "durfee " << report.durfee << "\n";
        if (report.failing_k) {
            out << "failing_k " << *report.failing_k << "\n";
            out << "lhs " << report.lhs << "\n";
            out << "rhs " << report.rhs << "\n";
        } else {
            out << "failing_k none\n";
        }
    }
    return report.graphical ? kOk : kNotGraphical;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
    const DegreeSequence seq = parse_sequence(read_text_file(cfg.input));
    if (!check_graphical(seq, EgOptions{Mode::sequential, 1}).graphical) {
        out << "not graphical n=" << seq.size() << "\n";
        return kNotGraphical;
    }
    GenOptions options;
    options.mode = parse_mode(cfg.mode);
    options.workers = cfg.workers;
    options.batch_shortcut = !cfg.no_shortcut;
    const Generated result = generate(seq, cfg.seed, options);

    emit(cfg.out_path, format_edges(result.graph), out);
    if (!cfg.record_path.empty()) {
        const GenRecord& r = result.record;
        const nlohmann::ordered_json record = {
            {"seed", r.seed},   {"n", r.n}, {"m", r.m()}, {"log_prob", r.log_prob},
            {"shortcut_batches", r.shortcut_batches},
        };
        emit(cfg.record_path, record.dump(2) + "\n", out);
    }
    return kOk;
}

int cmd_swap(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Graph g = parse_edges(read_text_file(cfg.input));
    Rng rng(cfg.seed, Stream::swap);
    const SwapResult result = randomize(std::move(g), cfg.swaps, rng);
    if (!cfg.out_path.empty()) write_text_file(cfg.out_path, format_edges(result.graph));

    const SwapStats& s = result.stats;
    out << "attempted " << s.attempted << "\n"
        << "accepted " << s.accepted << "\n"
        << "rejected_selfloop " << s.rejected_selfloop << "\n"
        << "rejected_parallel " << s.rejected_parallel << "\n"
        << "rejected_degenerate " << s.rejected_degenerate << "\n"
        << "capped " << (s.capped ? "true" : "false") << "\n";
    if (s.capped) err << "warning: attempt cap reached before the swap budget\n";
    return kOk;
}

int cmd_metrics(const RunConfig& cfg, std::ostream& out) {
    const Graph g = parse_edges(read_text_file(cfg.input));
    metrics::MetricsOptions options;
    options.workers = cfg.workers;
    options.skip_cliques = std::find(cfg.skip.begin(), cfg.skip.end(), "cliques") != cfg.skip.end();
    const metrics::MetricsReport report = metrics::compute(g, options);
    out << metrics::format_report(report);
    if (!cfg.hist_path.empty()) {
        write_text_file(cfg.hist_path, metrics::histogram_csv(report.clustering_histogram, cfg.header));
    }
    return kOk;
}

int cmd_bench(const RunConfig& cfg, bool generator, std::ostream& out) {
    const std::vector<int> workers = parse_worker_list(cfg.worker_list);
    BenchReport report;
    if (generator) {
        const DegreeSequence seq = parse_sequence(read_text_file(cfg.input));
        report = bench_generator(seq, cfg.seed, workers, cfg.reps, cfg.input);
    } else {
        const std::vector<Degree> sorted = sort_descending(parse_degrees(read_text_file(cfg.input)));
        report = bench_graphicality(sorted, workers, cfg.reps, cfg.input);
    }
    emit(cfg.out_path, report.csv(cfg.header), out);
    return kOk;
}

int cmd_synth(const RunConfig& cfg, std::ostream& out) {
    std::vector<Degree> degrees;
    if (cfg.kind == "powerlaw") {
        degrees = synth_powerlaw(cfg.n, cfg.gamma, cfg.dmax, cfg.seed);
    } else if (cfg.kind == "regular") {
        degrees = synth_regular(cfg.n, cfg.degree);
    } else {
        degrees = degrees_from_graph(parse_edges(read_text_file(cfg.input)));
        std::sort(degrees.begin(), degrees.end(), std::greater<>{});
    }
    emit(cfg.out_path, format_sequence(degrees), out);
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graphical degree sequences: test, generate, rewire, measure"};
    app.require_subcommand(1, 1);
    RunConfig cfg;

    auto add_workers = [&](CLI::App* sub) {
        sub->add_option("--workers", cfg.workers, "Worker threads")
            ->envname("DEGSEQ_WORKERS")
            ->check(CLI::PositiveNumber);
    };
    auto add_mode = [&](CLI::App* sub) {
        sub->add_option("--mode", cfg.mode, "seq or par")->check(CLI::IsMember({"seq", "par"}));
    };

    auto* check = app.add_subcommand("check", "Test whether a degree sequence is graphical");
    check->add_option("file", cfg.input, "Degree-sequence file")->required();
    add_workers(check);
    add_mode(check);
    check->add_flag("--verbose,-v", cfg.verbose, "Print durfee number and failing inequality");

    auto* gen = app.add_subcommand("generate", "Random simple graph realizing a degree sequence");
    gen->add_option("degfile", cfg.input, "Degree-sequence file")->required();
    gen->add_option("--seed", cfg.seed, "RNG seed")->required();
    add_workers(gen);
    add_mode(gen);
    gen->add_option("--out", cfg.out_path, "Edge file (default: stdout)");
    gen->add_option("--record", cfg.record_path, "Run record (JSON)");
    gen->add_flag("--no-shortcut", cfg.no_shortcut, "Disable batch assignment of forced edges");

    auto* swap = app.add_subcommand("swap", "Degree-preserving edge-swap randomization");
    swap->add_option("edgefile", cfg.input, "Edge file")->required();
    swap->add_option("--seed", cfg.seed, "RNG seed")->required();
    swap->add_option("--swaps", cfg.swaps, "Accepted swaps (default: ceil(m/2 ln m))");
    swap->add_option("--out", cfg.out_path, "Rewired edge file");

    auto* met = app.add_subcommand("metrics", "Structural properties of a graph");
    met->add_option("edgefile", cfg.input, "Edge file")->required();
    met->add_option("--skip", cfg.skip, "Metrics to skip (cliques)")
        ->check(CLI::IsMember({"cliques"}));
    met->add_option("--hist", cfg.hist_path, "Clustering histogram CSV");
    met->add_flag("--header", cfg.header, "CSV header line");
    add_workers(met);

    auto* beg = app.add_subcommand("bench-eg", "Strong scaling of the parallel graphicality test");
    auto* bgen = app.add_subcommand("bench-gen", "Strong scaling of the parallel generator");
    for (auto* sub : {beg, bgen}) {
        sub->add_option("degfile", cfg.input, "Degree-sequence file")->required();
        sub->add_option("--workers", cfg.worker_list, "Comma-separated worker counts, starting at 1");
        sub->add_option("--reps", cfg.reps, "Repetitions per worker count (>= 5)");
        sub->add_option("--out", cfg.out_path, "CSV output (default: stdout)");
        sub->add_flag("--header", cfg.header, "CSV header line");
    }
    bgen->add_option("--seed", cfg.seed, "RNG seed");

    auto* synth = app.add_subcommand("synth", "Write a synthetic graphical degree sequence");
    synth->add_option("kind", cfg.kind, "powerlaw, regular or from-graph")
        ->required()
        ->check(CLI::IsMember({"powerlaw", "regular", "from-graph"}));
    synth->add_option("--n", cfg.n, "Vertex count");
    synth->add_option("--gamma", cfg.gamma, "Power-law exponent");
    synth->add_option("--dmax", cfg.dmax, "Power-law maximum degree (default sqrt(n))");
    synth->add_option("--degree", cfg.degree, "Degree for regular sequences");
    synth->add_option("--graph", cfg.input, "Edge file for from-graph");
    synth->add_option("--seed", cfg.seed, "RNG seed");
    synth->add_option("--out", cfg.out_path, "Output file (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code == 0) return kOk;
        err << app.help();
        return kUsageError;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(cfg, out);
        if (app.got_subcommand(gen)) return cmd_generate(cfg, out);
        if (app.got_subcommand(swap)) return cmd_swap(cfg, out, err);
        if (app.got_subcommand(met)) return cmd_metrics(cfg, out);
        if (app.got_subcommand(beg)) return cmd_bench(cfg, false, out);
        if (app.got_subcommand(bgen)) return cmd_bench(cfg, true, out);
        if (app.got_subcommand(synth)) {
            if (cfg.kind == "from-graph" && cfg.input.empty()) {
                err << "synth from-graph requires --graph\n";
                return kUsageError;
            }
            return cmd_synth(cfg, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        if (e.code() == ErrorCode::not_graphical) return kNotGraphical;
        return is_invariant_breach(e.code()) ? kInternalError : kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInternalError;
    }
    err << app.help();
    return kUsageError;
}

} // namespace degseq::cli
