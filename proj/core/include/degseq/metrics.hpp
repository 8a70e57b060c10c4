#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degseq/graph.hpp"

namespace degseq::metrics {

inline constexpr std::size_t kHistogramBins = 100;
inline constexpr std::size_t kCliqueVertexLimit = 100'000;

struct ComponentStats {
    std::size_t count = 0;
    std::vector<std::size_t> sizes; // descending
};

/// Averages and maxima over ordered pairs (s, t), s != t, with t reachable
/// from s. Unreachable pairs are ignored.
struct PathStats {
    double avg_shortest_path = 0.0;
    std::size_t diameter = 0;
};

struct ClusteringStats {
    double average = 0.0;
    std::vector<double> local;
    /// 100 uniform bins on [0, 1]; a coefficient of exactly 1 lands in the last bin.
    std::vector<std::size_t> histogram;
};

/// Betweenness of v: number of unordered pairs {s, t} (s, t != v), each
/// weighted by the fraction of s-t shortest paths through v, divided by
/// (n-1)(n-2). Closeness of v: (r - 1) / (sum of distances to the r - 1
/// other vertices it reaches), 0 for isolated vertices.
struct CentralityStats {
    double avg_betweenness = 0.0;
    double avg_closeness = 0.0;
    std::vector<double> betweenness;
    std::vector<double> closeness;
};

std::uint64_t triangles(const Graph& g);
/// Triangles through each vertex; sums to 3 * triangles(g).
std::vector<std::uint64_t> vertex_triangles(const Graph& g);

ComponentStats components(const Graph& g);

std::vector<std::size_t> degree_histogram(const Graph& g);

/// Throws Error(no_edges) when the graph has no edge.
PathStats path_stats(const Graph& g, int workers = 1);

ClusteringStats clustering(const Graph& g);

CentralityStats centralities(const Graph& g, int workers = 1);

/// Maximal cliques (isolated vertices count as singleton cliques), via
/// pivoted Bron–Kerbosch over a degeneracy order. Throws Error(too_large) for
/// n > kCliqueVertexLimit unless allow_large is set.
std::uint64_t maximal_cliques(const Graph& g, bool allow_large = false);

struct MetricsOptions {
    bool skip_cliques = false;
    bool allow_large = false;
    int workers = 1;
};

struct MetricsReport {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    /// Index d holds the number of vertices of degree d.
    std::vector<std::size_t> degree_histogram;
    std::uint64_t triangles = 0;
    std::optional<std::uint64_t> maximal_cliques;
    std::size_t components = 0;
    /// Absent for edgeless graphs.
    std::optional<PathStats> paths;
    double avg_betweenness = 0.0;
    double avg_closeness = 0.0;
    double avg_clustering = 0.0;
    std::vector<std::size_t> clustering_histogram;
};

MetricsReport compute(const Graph& g, const MetricsOptions& options = {});

/// Aligned `key  value` lines.
std::string format_report(const MetricsReport& report);

/// `bin_lower,count` lines, optionally preceded by a header.
std::string histogram_csv(const std::vector<std::size_t>& histogram, bool header = false);

} // namespace degseq::metrics
