// Acceptance runner: one PASS / FAIL / SKIP line per criterion. Exit status
// is non-zero iff any criterion fails. Tolerances and sample sizes are the
// constants below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "degseq/bench.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/edgeswap.hpp"
#include "degseq/error.hpp"
#include "degseq/generator.hpp"
#include "degseq/graphicality.hpp"
#include "degseq/metrics.hpp"
#include "degseq/synth.hpp"
#include "support/oracles.hpp"

using namespace degseq;

namespace {

constexpr double kVerdictBudgetSeconds = 1e-3;
constexpr std::size_t kOracleMaxN = 7;
constexpr Degree kOracleMaxEntry = 6;
constexpr int kDurfeeSamples = 10'000;
constexpr std::size_t kDurfeeMaxN = 200;
constexpr int kModeSamples = 1'000;
constexpr std::size_t kModeMaxN = 1'000'000;
constexpr int kGeneratorRuns = 1'000;
constexpr std::size_t kGeneratorMaxN = 256;
constexpr int kDeterminismRuns = 200;
constexpr int kSupportRuns = 3'000;
constexpr double kSupportMinFrequency = 0.01;
constexpr int kTraceSeeds = 10'000;
constexpr int kSamplingDraws = 100'000;
constexpr double kSamplingSigmas = 3.0;
constexpr int kSwapGraphs = 100;
constexpr int kMetricGraphs = 100;
constexpr std::size_t kMetricMaxN = 15;
constexpr double kMetricTolerance = 1e-9;
constexpr std::size_t kScalingEgN = 10'000'000;
constexpr std::size_t kScalingGenN = 2'000;
constexpr double kScalingMinSpeedup = 1.8;
constexpr int kScalingMinCores = 4;
constexpr std::size_t kTableThreeN = 2'000;

enum class Status { pass, fail, skip };

struct Outcome {
    Status status;
    std::string detail;
};

Outcome pass(std::string detail) { return {Status::pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {Status::fail, std::move(detail)}; }

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

const std::vector<int> kWorkerCounts{1, 2, 4, 8};

GenOptions gen_options(Mode mode, int workers) {
    GenOptions o;
    o.mode = mode;
    o.workers = workers;
    return o;
}

// Random degree sequence for the mode-equivalence sweep: a mix of small
// uniform degrees, heavy heads that usually break some inequality, and odd
// sums.
std::vector<Degree> sweep_sequence(std::size_t n, std::mt19937_64& rng) {
    std::vector<Degree> d(n);
    const std::uint64_t cap = 1 + rng() % std::min<std::uint64_t>(n, 2000);
    for (auto& x : d) x = static_cast<Degree>(rng() % cap);
    switch (rng() % 3) {
    case 0:
        break;
    case 1: {
        const std::size_t head = 1 + rng() % std::max<std::size_t>(1, n / 50 + 1);
        for (std::size_t i = 0; i < head && i < n; ++i) d[i] = static_cast<Degree>(n - 1 - rng() % (n / 4 + 1));
        break;
    }
    default:
        d[rng() % n] = static_cast<Degree>(rng() % n);
        break;
    }
    if (rng() % 4 != 0) force_even_sum(d);
    return d;
}

// Random sequence for the Durfee sweep: graphical degree vectors nudged
// by moving a few units between vertices, or plain uniform draws.
std::vector<Degree> durfee_sequence(std::size_t n, std::mt19937_64& rng) {
    std::vector<Degree> d;
    if (rng() % 2 == 0) {
        d = oracle::random_graphical(n, rng);
        const int moves = static_cast<int>(rng() % 4);
        for (int i = 0; i < moves && n >= 2; ++i) {
            const std::size_t from = rng() % n;
            const std::size_t to = rng() % n;
            if (d[from] > 0 && d[to] < static_cast<Degree>(n) - 1) {
                --d[from];
                ++d[to];
            }
        }
    } else {
        d.resize(n);
        const std::uint64_t cap = 1 + rng() % n;
        for (auto& x : d) x = static_cast<Degree>(rng() % cap);
        if (rng() % 3 != 0) force_even_sum(d);
    }
    return d;
}

Outcome c01_example_verdicts() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "degseq_acceptance_c01";
    fs::create_directories(dir);
    write_text_file(dir / "d1.txt", "3 3 2 2 2\n");
    write_text_file(dir / "d2.txt", "4 3 2 1\n");
    std::ostringstream out, err;
    const int d1 = cli::run({"check", (dir / "d1.txt").string()}, out, err);
    const int d2 = cli::run({"check", (dir / "d2.txt").string()}, out, err);
    fs::remove_all(dir);

    auto timed = [](std::vector<Degree> d) {
        double best = 1e9;
        bool verdict = false;
        for (int i = 0; i < 5; ++i) {
            const auto t0 = std::chrono::steady_clock::now();
            verdict = check_graphical(d).graphical;
            best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        }
        return std::pair{verdict, best};
    };
    const auto [v1, t1] = timed({3, 3, 2, 2, 2});
    const auto [v2, t2] = timed({4, 3, 2, 1});
    const bool ok = d1 == cli::kOk && d2 == cli::kNotGraphical && v1 && !v2 &&
                    t1 < kVerdictBudgetSeconds && t2 < kVerdictBudgetSeconds;
    const auto detail = fmt("check d1 exit %d, d2 exit %d; library %.1f us / %.1f us", d1, d2, t1 * 1e6, t2 * 1e6);
    return ok ? pass(detail) : fail(detail);
}

Outcome c02_durfee_value() {
    const std::size_t c = corrected_durfee(std::vector<Degree>{3, 2, 2, 2, 1});
    const auto detail = fmt("corrected_durfee(3,2,2,2,1) = %zu", c);
    return c == 3 ? pass(detail) : fail(detail);
}

Outcome c03_oracle_equivalence() {
    std::size_t total = 0, agree = 0, graphical = 0;
    std::vector<Degree> d;
    std::function<void(std::size_t, Degree)> rec = [&](std::size_t left, Degree cap) {
        if (left == 0) {
            ++total;
            const bool ours = check_graphical(d).graphical;
            const bool truth = oracle::realizable(d);
            agree += ours == truth ? 1 : 0;
            graphical += truth ? 1 : 0;
            return;
        }
        for (Degree x = 0; x <= cap; ++x) {
            d.push_back(x);
            rec(left - 1, x);
            d.pop_back();
        }
    };
    for (std::size_t n = 1; n <= kOracleMaxN; ++n) rec(n, kOracleMaxEntry);
    const auto detail = fmt("%zu/%zu sequences agree (n = 1..%zu, entries <= %lld, %zu graphical)", agree,
                            total, kOracleMaxN, static_cast<long long>(kOracleMaxEntry), graphical);
    return agree == total ? pass(detail) : fail(detail);
}

Outcome c04_durfee_sufficiency() {
    std::mt19937_64 rng(0xd0f);
    int agree = 0, graphical = 0;
    for (int i = 0; i < kDurfeeSamples; ++i) {
        const std::size_t n = 1 + rng() % kDurfeeMaxN;
        const auto d = durfee_sequence(n, rng);
        const bool first_c = check_graphical(d, EgOptions{Mode::sequential, 1}).graphical;
        const bool all_n = oracle::erdos_gallai_all(d);
        agree += first_c == all_n ? 1 : 0;
        graphical += all_n ? 1 : 0;
    }
    const auto detail = fmt("%d/%d verdicts agree (%d graphical)", agree, kDurfeeSamples, graphical);
    return agree == kDurfeeSamples ? pass(detail) : fail(detail);
}

Outcome c05_mode_equivalence() {
    std::mt19937_64 rng(0x5eed5);
    int agree = 0, graphical = 0;
    std::size_t largest = 0;
    const double log_max = std::log(static_cast<double>(kModeMaxN));
    for (int i = 0; i < kModeSamples; ++i) {
        std::size_t n = static_cast<std::size_t>(std::exp(std::uniform_real_distribution<double>(0, log_max)(rng)));
        if (i == 0) n = kModeMaxN;
        n = std::clamp<std::size_t>(n, 1, kModeMaxN);
        largest = std::max(largest, n);
        const auto sorted = sort_descending(sweep_sequence(n, rng));
        const GraphicalityReport ref = check_graphical_sorted(sorted, EgOptions{Mode::sequential, 1});
        bool same = true;
        for (int w : kWorkerCounts) same = same && check_graphical_sorted(sorted, EgOptions{Mode::parallel, w, 0}) == ref;
        agree += same ? 1 : 0;
        graphical += ref.graphical ? 1 : 0;
    }
    const auto detail = fmt("%d/%d identical reports over workers {1,2,4,8} (n up to %zu, %d graphical)", agree,
                            kModeSamples, largest, graphical);
    return agree == kModeSamples ? pass(detail) : fail(detail);
}

Outcome c06_generator_exactness() {
    std::mt19937_64 rng(0x6e4);
    int ok = 0;
    std::size_t edges = 0;
    for (int i = 0; i < kGeneratorRuns; ++i) {
        const auto d = oracle::random_graphical(1 + rng() % kGeneratorMaxN, rng);
        try {
            const Generated g = generate(DegreeSequence(d), rng());
            if (oracle::simple_with_degrees(g.graph, d)) ++ok;
            edges += g.graph.edge_count();
        } catch (const Error&) {
        }
    }
    const auto detail = fmt("%d/%d runs exact and simple (%zu edges total)", ok, kGeneratorRuns, edges);
    return ok == kGeneratorRuns ? pass(detail) : fail(detail);
}

Outcome c07_mode_determinism() {
    std::mt19937_64 rng(0x7);
    int same = 0;
    for (int i = 0; i < kDeterminismRuns; ++i) {
        const auto d = oracle::random_graphical(2 + rng() % kGeneratorMaxN, rng);
        const std::uint64_t seed = rng();
        const auto ref = format_edges(generate(DegreeSequence(d), seed, gen_options(Mode::sequential, 1)).graph);
        bool all = true;
        for (int w : kWorkerCounts) {
            all = all && format_edges(generate(DegreeSequence(d), seed, gen_options(Mode::parallel, w)).graph) == ref;
        }
        same += all ? 1 : 0;
    }
    const auto detail = fmt("%d/%d byte-identical traces over workers {1,2,4,8}", same, kDeterminismRuns);
    return same == kDeterminismRuns ? pass(detail) : fail(detail);
}

Outcome c08_support_positivity() {
    const std::vector<Degree> d{2, 2, 2, 2};
    const auto all = oracle::all_realizations(d);
    std::map<std::vector<Edge>, int> counts;
    for (const auto& r : all) counts[r] = 0;
    for (int seed = 0; seed < kSupportRuns; ++seed) {
        ++counts[oracle::edge_list(generate(DegreeSequence(d), static_cast<std::uint64_t>(seed)).graph)];
    }
    bool ok = all.size() == 3 && counts.size() == 3;
    std::string freqs;
    for (const auto& [edges, c] : counts) {
        const double f = static_cast<double>(c) / kSupportRuns;
        ok = ok && f >= kSupportMinFrequency;
        freqs += fmt("%s%.3f", freqs.empty() ? "" : ", ", f);
    }
    const auto detail = fmt("%zu realizations enumerated, %zu emitted; frequencies %s", all.size(), counts.size(),
                            freqs.c_str());
    return ok ? pass(detail) : fail(detail);
}

Outcome c09_example_trace() {
    // (v3,v5), (v3,v1), (v5,v2), (v1,v4), (v1,v2), (v2,v4) with 0-based ids.
    std::vector<Edge> target{make_edge(2, 4), make_edge(2, 0), make_edge(4, 1),
                             make_edge(0, 3), make_edge(0, 1), make_edge(1, 3)};
    std::sort(target.begin(), target.end());
    int hits = 0;
    int first = -1;
    for (int seed = 0; seed < kTraceSeeds; ++seed) {
        if (oracle::edge_list(generate(DegreeSequence({3, 3, 2, 2, 2}), static_cast<std::uint64_t>(seed)).graph) ==
            target) {
            ++hits;
            if (first < 0) first = seed;
        }
    }
    const auto detail = fmt("%d/%d seeds emit the edge set (first seed %d)", hits, kTraceSeeds, first);
    return hits > 0 ? pass(detail) : fail(detail);
}

Outcome c10_sampling_law() {
    std::mt19937_64 setup(0x10);
    std::vector<Degree> residual(40);
    CandidateSet c;
    for (Vertex v = 0; v < residual.size(); ++v) {
        residual[v] = static_cast<Degree>(setup() % 9);
        if (residual[v] > 0 && setup() % 4 != 0) {
            c.vertices.push_back(v);
            c.weight_sum += residual[v];
        }
    }
    Rng rng(0x10, Stream::bench);
    std::map<Vertex, int> picks;
    for (int i = 0; i < kSamplingDraws; ++i) ++picks[sample_candidate(c, residual, rng)];
    double worst = 0.0;
    for (Vertex v : c.vertices) {
        const double p = static_cast<double>(residual[v]) / static_cast<double>(c.weight_sum);
        const double sd = std::sqrt(kSamplingDraws * p * (1 - p));
        worst = std::max(worst, std::abs(picks[v] - kSamplingDraws * p) / sd);
    }
    const bool ok = worst <= kSamplingSigmas && picks.size() == c.vertices.size();
    const auto detail = fmt("%zu candidates, %d draws, max deviation %.2f sd", c.size(), kSamplingDraws, worst);
    return ok ? pass(detail) : fail(detail);
}

Outcome c11_edge_swap() {
    std::mt19937_64 rng(0x11);
    int ok = 0;
    std::uint64_t accepted = 0;
    for (int i = 0; i < kSwapGraphs; ++i) {
        Graph g(0);
        do {
            g = oracle::random_graph(10 + rng() % 190, 0.02 + 0.2 * std::uniform_real_distribution<double>()(rng), rng);
        } while (g.edge_count() < 2);
        const auto degrees = g.degree_vector();
        Rng swap_rng(rng(), Stream::swap);
        const SwapResult r = randomize(g, std::nullopt, swap_rng);
        const bool budget = r.stats.accepted == default_swap_budget(g.edge_count());
        if (budget && !r.stats.capped && oracle::simple_with_degrees(r.graph, degrees) && r.graph.consistent()) ++ok;
        accepted += r.stats.accepted;
    }
    const auto detail = fmt("%d/%d graphs keep degrees and simplicity after the full budget (%llu swaps)", ok,
                            kSwapGraphs, static_cast<unsigned long long>(accepted));
    return ok == kSwapGraphs ? pass(detail) : fail(detail);
}

Outcome c12_metric_oracles() {
    std::mt19937_64 rng(0x12);
    int ok = 0;
    std::string first_failure;
    for (int i = 0; i < kMetricGraphs; ++i) {
        const std::size_t n = 1 + rng() % kMetricMaxN;
        const Graph g = oracle::random_graph(n, std::uniform_real_distribution<double>(0.05, 0.8)(rng), rng);
        const auto e = oracle::brute_metrics(g);
        const auto r = metrics::compute(g, {false, false, 2});
        auto close = [](double a, double b) { return std::abs(a - b) <= kMetricTolerance; };
        std::vector<std::pair<const char*, bool>> checks{
            {"triangles", r.triangles == e.triangles},
            {"maximal_cliques", r.maximal_cliques == e.maximal_cliques},
            {"components", r.components == e.components},
            {"paths", g.edge_count() == 0 ? !r.paths.has_value()
                                          : r.paths && close(r.paths->avg_shortest_path, e.avg_shortest_path) &&
                                                r.paths->diameter == e.diameter},
            {"centralities", close(r.avg_betweenness, e.avg_betweenness) && close(r.avg_closeness, e.avg_closeness)},
            {"clustering", close(r.avg_clustering, e.avg_clustering)},
        };
        bool all = true;
        for (auto [name, good] : checks) {
            if (!good && first_failure.empty()) first_failure = fmt("graph %d: %s", i, name);
            all = all && good;
        }
        ok += all ? 1 : 0;
    }
    const auto detail = fmt("%d/%d graphs match on all six families%s%s", ok, kMetricGraphs,
                            first_failure.empty() ? "" : "; first mismatch ", first_failure.c_str());
    return ok == kMetricGraphs ? pass(detail) : fail(detail);
}

// Dense-ish sequence for the generator scaling run.
std::vector<Degree> dense_sequence(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return oracle::random_graph(n, 0.01, rng).degree_vector();
}

Outcome c13_scaling() {
    const unsigned cores = std::thread::hardware_concurrency();
    const auto eg_input = synth_powerlaw(kScalingEgN, 2.5, 0, 13);
    const auto gen_input = DegreeSequence(dense_sequence(kScalingGenN, 13));
    const std::vector<int> workers{1, 2, 4};

    if (cores < static_cast<unsigned>(kScalingMinCores)) {
        // Timings are meaningless here; still run both equivalence gates.
        const GraphicalityReport ref = check_graphical_sorted(eg_input, EgOptions{Mode::parallel, 1, 0});
        bool eg_ok = true;
        for (int w : workers) eg_ok = eg_ok && check_graphical_sorted(eg_input, EgOptions{Mode::parallel, w, 0}) == ref;
        const auto trace = generate(gen_input, 13, gen_options(Mode::parallel, 1)).record.trace;
        bool gen_ok = true;
        for (int w : workers) gen_ok = gen_ok && generate(gen_input, 13, gen_options(Mode::parallel, w)).record.trace == trace;
        const auto detail = fmt("host has %u core(s), needs >= %d; equivalence gates %s (eg n=%zu, gen n=%zu, m=%lld)",
                                cores, kScalingMinCores, eg_ok && gen_ok ? "pass" : "FAIL", kScalingEgN, kScalingGenN,
                                static_cast<long long>(gen_input.edge_count()));
        return eg_ok && gen_ok ? Outcome{Status::skip, detail} : fail(detail);
    }

    try {
        const BenchReport eg = bench_graphicality(eg_input, workers, kMinBenchRepetitions, "powerlaw 1e7");
        const BenchReport gen = bench_generator(gen_input, 13, workers, kMinBenchRepetitions, "random n=2000");
        const double eg4 = eg.rows.back().speedup;
        const double gen4 = gen.rows.back().speedup;
        const auto detail = fmt("speedup at 4 workers: eg %.2f, gen %.2f (threshold %.1f)", eg4, gen4,
                                kScalingMinSpeedup);
        return eg4 >= kScalingMinSpeedup && gen4 >= kScalingMinSpeedup ? pass(detail) : fail(detail);
    } catch (const Error& e) {
        return fail(e.what());
    }
}

Outcome c14_generator_vs_swap() {
    const auto seq = synth_powerlaw(kTableThreeN, 2.5, 0, 14);
    const Generated generated = generate(DegreeSequence(seq), 14);
    Rng swap_rng(14, Stream::swap);
    const SwapResult swapped = randomize(oracle::havel_hakimi(seq), std::nullopt, swap_rng);

    const auto a = metrics::compute(generated.graph, {false, false, default_workers()});
    const auto b = metrics::compute(swapped.graph, {false, false, default_workers()});
    std::vector<std::size_t> expect;
    for (Degree d : seq) {
        if (static_cast<std::size_t>(d) >= expect.size()) expect.resize(static_cast<std::size_t>(d) + 1, 0);
        ++expect[static_cast<std::size_t>(d)];
    }
    const bool ok = a.degree_histogram == b.degree_histogram && a.degree_histogram == expect &&
                    !metrics::format_report(a).empty() && !metrics::format_report(b).empty();
    const auto detail = fmt("n=%zu m=%zu; generator: %llu triangles, clustering %.4f; swap: %llu triangles, "
                            "clustering %.4f; degree histograms %s",
                            kTableThreeN, generated.graph.edge_count(), static_cast<unsigned long long>(a.triangles),
                            a.avg_clustering, static_cast<unsigned long long>(b.triangles), b.avg_clustering,
                            ok ? "identical" : "DIFFER");
    return ok ? pass(detail) : fail(detail);
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
        {"example verdicts", c01_example_verdicts},
        {"durfee value", c02_durfee_value},
        {"oracle equivalence", c03_oracle_equivalence},
        {"durfee sufficiency", c04_durfee_sufficiency},
        {"parallel-sequential EG equivalence", c05_mode_equivalence},
        {"generator exactness + simplicity", c06_generator_exactness},
        {"mode determinism", c07_mode_determinism},
        {"support positivity", c08_support_positivity},
        {"example trace reachability", c09_example_trace},
        {"sampling law", c10_sampling_law},
        {"edge swap invariants", c11_edge_swap},
        {"metrics oracles", c12_metric_oracles},
        {"scaling", c13_scaling},
        {"generator vs edge swap pipeline", c14_generator_vs_swap},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const char* tag = o.status == Status::pass ? "PASS" : o.status == Status::skip ? "SKIP" : "FAIL";
        failures += o.status == Status::fail ? 1 : 0;
        std::printf("[%s] %2zu %s: %s (%.1fs)\n", tag, i + 1, criteria[i].first, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
