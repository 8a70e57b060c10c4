#include <benchmark/benchmark.h>

#include <algorithm>
#include <map>
#include <random>

#include "degseq/edgeswap.hpp"
#include "degseq/generator.hpp"
#include "degseq/graphicality.hpp"
#include "degseq/metrics.hpp"
#include "degseq/synth.hpp"

using namespace degseq;

namespace {

const std::vector<Degree>& powerlaw(std::size_t n) {
    static std::map<std::size_t, std::vector<Degree>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, synth_powerlaw(n, 2.5, 0, 1)).first;
    return it->second;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (coin(rng)) g.add_edge(a, b);
        }
    }
    return g;
}

} // namespace

// args: n, workers
void BM_Graphicality(benchmark::State& state) {
    const auto& d = powerlaw(static_cast<std::size_t>(state.range(0)));
    const EgOptions options{Mode::parallel, static_cast<int>(state.range(1)), 0};
    for (auto _ : state) benchmark::DoNotOptimize(check_graphical_sorted(d, options));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Graphicality)
    ->ArgsProduct({{1 << 16, 1 << 20, 1 << 23}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_SortDescending(benchmark::State& state) {
    std::vector<Degree> d = powerlaw(static_cast<std::size_t>(state.range(0)));
    std::shuffle(d.begin(), d.end(), std::mt19937_64(3));
    for (auto _ : state) benchmark::DoNotOptimize(sort_descending(d));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SortDescending)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

// args: n, workers
void BM_Generate(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const DegreeSequence seq(powerlaw(n));
    GenOptions options;
    options.mode = Mode::parallel;
    options.workers = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(generate(seq, 7, options).record.log_prob);
    state.counters["edges"] = static_cast<double>(seq.edge_count());
}
BENCHMARK(BM_Generate)->ArgsProduct({{1000, 4000}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_PairProbe(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const DegreeSequence seq(powerlaw(n));
    const ResidualState residual(seq);
    const PairProbe probe(residual);
    const Vertex u = *residual.min_positive_vertex();
    Vertex v = 0;
    for (auto _ : state) {
        v = (v + 1) % static_cast<Vertex>(n);
        if (v == u || residual.residual(v) == 0) continue;
        benchmark::DoNotOptimize(probe.admits(u, v));
    }
}
BENCHMARK(BM_PairProbe)->Arg(10000)->Arg(1000000);

void BM_Randomize(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.01, 5);
    for (auto _ : state) {
        Rng rng(9, Stream::swap);
        benchmark::DoNotOptimize(randomize(g, std::nullopt, rng).stats.accepted);
    }
    state.counters["edges"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_Randomize)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Metrics(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.01, 5);
    const metrics::MetricsOptions options{false, false, static_cast<int>(state.range(1))};
    for (auto _ : state) benchmark::DoNotOptimize(metrics::compute(g, options).triangles);
}
BENCHMARK(BM_Metrics)->ArgsProduct({{2000}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
