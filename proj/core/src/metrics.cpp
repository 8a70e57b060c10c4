#include "degseq/metrics.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <queue>
#include <string>

#include "degseq/error.hpp"

namespace degseq::metrics {

namespace {

// Compressed sorted adjacency.
struct Csr {
    std::vector<std::size_t> offsets;
    std::vector<Vertex> targets;

    explicit Csr(const Graph& g) : offsets(g.vertex_count() + 1, 0) {
        const std::size_t n = g.vertex_count();
        for (Vertex v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + g.neighbors(v).size();
        targets.resize(offsets[n]);
        for (Vertex v = 0; v < n; ++v) {
            auto nb = g.neighbors(v);
            auto out = targets.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
            std::copy(nb.begin(), nb.end(), out);
            std::sort(out, out + static_cast<std::ptrdiff_t>(nb.size()));
        }
    }

    std::size_t size() const { return offsets.size() - 1; }
    std::span<const Vertex> operator[](Vertex v) const {
        return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
    }
};

// Per-source BFS results shared by path statistics and centralities.
struct Sweep {
    std::vector<double> pair_dependency; // Brandes sums over ordered sources
    std::vector<std::uint64_t> distance_sum;
    std::vector<std::size_t> reached; // including the source itself
    std::vector<std::size_t> eccentricity;
};

Sweep bfs_sweep(const Csr& adj, int workers) {
    const std::size_t n = adj.size();
    Sweep out;
    out.pair_dependency.assign(n, 0.0);
    out.distance_sum.assign(n, 0);
    out.reached.assign(n, 0);
    out.eccentricity.assign(n, 0);

    const int team = std::max(1, workers);
#pragma omp parallel num_threads(team)
    {
        std::vector<double> local_dependency(n, 0.0);
        std::vector<std::int64_t> dist(n, -1);
        std::vector<double> sigma(n, 0.0);
        std::vector<double> delta(n, 0.0);
        std::vector<Vertex> order;
        order.reserve(n);

#pragma omp for schedule(dynamic, 16)
        for (std::size_t s = 0; s < n; ++s) {
            order.clear();
            dist[s] = 0;
            sigma[s] = 1.0;
            order.push_back(static_cast<Vertex>(s));
            std::uint64_t dsum = 0;
            std::size_t ecc = 0;
            for (std::size_t head = 0; head < order.size(); ++head) {
                const Vertex v = order[head];
                for (Vertex w : adj[v]) {
                    if (dist[w] < 0) {
                        dist[w] = dist[v] + 1;
                        dsum += static_cast<std::uint64_t>(dist[w]);
                        ecc = static_cast<std::size_t>(dist[w]);
                        order.push_back(w);
                    }
                    if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
                }
            }
            for (std::size_t i = order.size(); i-- > 1;) {
                const Vertex w = order[i];
                for (Vertex v : adj[w]) {
                    if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
                }
                local_dependency[w] += delta[w];
            }
            out.distance_sum[s] = dsum;
            out.reached[s] = order.size();
            out.eccentricity[s] = ecc;
            for (Vertex v : order) {
                dist[v] = -1;
                sigma[v] = 0.0;
                delta[v] = 0.0;
            }
        }

#pragma omp critical
        for (std::size_t v = 0; v < n; ++v) out.pair_dependency[v] += local_dependency[v];
    }
    return out;
}

PathStats path_stats_from(const Sweep& sweep) {
    std::uint64_t total = 0;
    std::uint64_t pairs = 0;
    std::size_t diameter = 0;
    for (std::size_t s = 0; s < sweep.reached.size(); ++s) {
        total += sweep.distance_sum[s];
        pairs += sweep.reached[s] - 1;
        diameter = std::max(diameter, sweep.eccentricity[s]);
    }
    PathStats out;
    out.avg_shortest_path = pairs == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(pairs);
    out.diameter = diameter;
    return out;
}

CentralityStats centralities_from(const Sweep& sweep) {
    const std::size_t n = sweep.reached.size();
    CentralityStats out;
    out.betweenness.assign(n, 0.0);
    out.closeness.assign(n, 0.0);
    const double scale = n >= 3 ? 1.0 / (2.0 * static_cast<double>(n - 1) * static_cast<double>(n - 2)) : 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        out.betweenness[v] = sweep.pair_dependency[v] * scale;
        if (sweep.reached[v] > 1) {
            out.closeness[v] = static_cast<double>(sweep.reached[v] - 1) /
                               static_cast<double>(sweep.distance_sum[v]);
        }
    }
    if (n > 0) {
        out.avg_betweenness = std::accumulate(out.betweenness.begin(), out.betweenness.end(), 0.0) /
                              static_cast<double>(n);
        out.avg_closeness = std::accumulate(out.closeness.begin(), out.closeness.end(), 0.0) /
                            static_cast<double>(n);
    }
    return out;
}

void require_edges(const Graph& g) {
    if (g.edge_count() == 0) throw Error(ErrorCode::no_edges, "path statistics need at least one edge");
}

// Pivoted Bron–Kerbosch; P and X are sorted vertex lists.
class CliqueCounter {
public:
    explicit CliqueCounter(const Csr& adj) : adj_(adj) {}

    std::uint64_t run() {
        const std::size_t n = adj_.size();
        const std::vector<Vertex> order = degeneracy_order();
        std::vector<std::size_t> rank(n);
        for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;
        for (Vertex v : order) {
            std::vector<Vertex> p;
            std::vector<Vertex> x;
            for (Vertex w : adj_[v]) (rank[w] > rank[v] ? p : x).push_back(w);
            expand(std::move(p), std::move(x));
        }
        return count_;
    }

private:
    std::vector<Vertex> degeneracy_order() const {
        const std::size_t n = adj_.size();
        std::vector<std::size_t> degree(n);
        std::size_t max_degree = 0;
        for (Vertex v = 0; v < n; ++v) {
            degree[v] = adj_[v].size();
            max_degree = std::max(max_degree, degree[v]);
        }
        std::vector<std::vector<Vertex>> buckets(max_degree + 1);
        for (Vertex v = 0; v < n; ++v) buckets[degree[v]].push_back(v);
        std::vector<char> removed(n, 0);
        std::vector<Vertex> order;
        order.reserve(n);
        std::size_t low = 0;
        while (order.size() < n) {
            while (buckets[low].empty()) ++low;
            const Vertex v = buckets[low].back();
            buckets[low].pop_back();
            if (removed[v] || degree[v] != low) continue;
            removed[v] = 1;
            order.push_back(v);
            for (Vertex w : adj_[v]) {
                if (removed[w]) continue;
                --degree[w];
                buckets[degree[w]].push_back(w);
                low = std::min(low, degree[w]);
            }
        }
        return order;
    }

    std::vector<Vertex> intersect(const std::vector<Vertex>& set, Vertex v) const {
        std::vector<Vertex> out;
        auto nb = adj_[v];
        std::set_intersection(set.begin(), set.end(), nb.begin(), nb.end(), std::back_inserter(out));
        return out;
    }

    std::size_t overlap(const std::vector<Vertex>& set, Vertex v) const {
        auto nb = adj_[v];
        std::size_t count = 0;
        auto a = set.begin();
        auto b = nb.begin();
        while (a != set.end() && b != nb.end()) {
            if (*a < *b) {
                ++a;
            } else if (*b < *a) {
                ++b;
            } else {
                ++count;
                ++a;
                ++b;
            }
        }
        return count;
    }

    void expand(std::vector<Vertex> p, std::vector<Vertex> x) {
        std::sort(p.begin(), p.end());
        std::sort(x.begin(), x.end());
        recurse(std::move(p), std::move(x));
    }

    void recurse(std::vector<Vertex> p, std::vector<Vertex> x) {
        if (p.empty()) {
            if (x.empty()) ++count_;
            return;
        }
        // Pivot maximizing |P ∩ N(pivot)| minimizes the branching below.
        Vertex pivot = p.front();
        std::size_t best = overlap(p, pivot);
        for (const auto* set : {&p, &x}) {
            for (Vertex u : *set) {
                const std::size_t o = overlap(p, u);
                if (o > best) {
                    best = o;
                    pivot = u;
                }
            }
        }
        std::vector<Vertex> branch;
        auto pivot_nb = adj_[pivot];
        std::set_difference(p.begin(), p.end(), pivot_nb.begin(), pivot_nb.end(),
                            std::back_inserter(branch));
        for (Vertex v : branch) {
            recurse(intersect(p, v), intersect(x, v));
            p.erase(std::lower_bound(p.begin(), p.end(), v));
            x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
    }

    const Csr& adj_;
    std::uint64_t count_ = 0;
};

} // namespace

std::vector<std::uint64_t> vertex_triangles(const Graph& g) {
    const Csr adj(g);
    std::vector<std::uint64_t> per_vertex(adj.size(), 0);
    for (Vertex u = 0; u < adj.size(); ++u) {
        auto nu = adj[u];
        for (Vertex v : nu) {
            if (v <= u) continue;
            auto nv = adj[v];
            auto a = std::upper_bound(nu.begin(), nu.end(), v);
            auto b = std::upper_bound(nv.begin(), nv.end(), v);
            while (a != nu.end() && b != nv.end()) {
                if (*a < *b) {
                    ++a;
                } else if (*b < *a) {
                    ++b;
                } else {
                    ++per_vertex[u];
                    ++per_vertex[v];
                    ++per_vertex[*a];
                    ++a;
                    ++b;
                }
            }
        }
    }
    return per_vertex;
}

std::uint64_t triangles(const Graph& g) {
    const auto per_vertex = vertex_triangles(g);
    return std::accumulate(per_vertex.begin(), per_vertex.end(), std::uint64_t{0}) / 3;
}

ComponentStats components(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack;
    ComponentStats out;
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        stack.push_back(root);
        std::size_t size = 0;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            ++size;
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        out.sizes.push_back(size);
    }
    std::sort(out.sizes.begin(), out.sizes.end(), std::greater<>{});
    out.count = out.sizes.size();
    return out;
}

PathStats path_stats(const Graph& g, int workers) {
    require_edges(g);
    return path_stats_from(bfs_sweep(Csr(g), workers));
}

ClusteringStats clustering(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const auto tri = vertex_triangles(g);
    ClusteringStats out;
    out.local.assign(n, 0.0);
    out.histogram.assign(kHistogramBins, 0);
    double total = 0.0;
    for (Vertex v = 0; v < n; ++v) {
        const auto deg = static_cast<double>(g.degree(v));
        if (deg >= 2) out.local[v] = 2.0 * static_cast<double>(tri[v]) / (deg * (deg - 1.0));
        total += out.local[v];
        const auto bin = std::min(kHistogramBins - 1,
                                  static_cast<std::size_t>(out.local[v] * static_cast<double>(kHistogramBins)));
        ++out.histogram[bin];
    }
    out.average = n == 0 ? 0.0 : total / static_cast<double>(n);
    return out;
}

CentralityStats centralities(const Graph& g, int workers) {
    return centralities_from(bfs_sweep(Csr(g), workers));
}

std::uint64_t maximal_cliques(const Graph& g, bool allow_large) {
    if (g.vertex_count() > kCliqueVertexLimit && !allow_large) {
        throw Error(ErrorCode::too_large, "maximal clique enumeration refused for n = " +
                                              std::to_string(g.vertex_count()));
    }
    const Csr adj(g);
    return CliqueCounter(adj).run();
}

std::vector<std::size_t> degree_histogram(const Graph& g) {
    std::vector<std::size_t> hist;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const std::size_t d = g.degree(v);
        if (d >= hist.size()) hist.resize(d + 1, 0);
        ++hist[d];
    }
    return hist;
}

MetricsReport compute(const Graph& g, const MetricsOptions& options) {
    MetricsReport report;
    report.vertices = g.vertex_count();
    report.edges = g.edge_count();
    report.degree_histogram = degree_histogram(g);
    report.triangles = triangles(g);
    if (!options.skip_cliques) report.maximal_cliques = maximal_cliques(g, options.allow_large);
    report.components = components(g).count;

    const Sweep sweep = bfs_sweep(Csr(g), options.workers);
    if (g.edge_count() > 0) report.paths = path_stats_from(sweep);
    const CentralityStats central = centralities_from(sweep);
    report.avg_betweenness = central.avg_betweenness;
    report.avg_closeness = central.avg_closeness;

    ClusteringStats cc = clustering(g);
    report.avg_clustering = cc.average;
    report.clustering_histogram = std::move(cc.histogram);
    return report;
}

std::string format_report(const MetricsReport& r) {
    std::string out;
    char buf[32];
    auto line = [&](const char* key, const std::string& value) {
        std::snprintf(buf, sizeof buf, "%-20s ", key);
        out += buf;
        out += value;
        out += '\n';
    };
    auto real = [](double x) {
        char b[48];
        std::snprintf(b, sizeof b, "%.10g", x);
        return std::string(b);
    };
    line("vertices", std::to_string(r.vertices));
    line("edges", std::to_string(r.edges));
    std::string degrees;
    for (std::size_t d = r.degree_histogram.size(); d-- > 0;) {
        if (r.degree_histogram[d] == 0) continue;
        if (!degrees.empty()) degrees += ' ';
        degrees += std::to_string(d) + ':' + std::to_string(r.degree_histogram[d]);
    }
    line("degree_histogram", degrees);
    line("triangles", std::to_string(r.triangles));
    line("maximal_cliques", r.maximal_cliques ? std::to_string(*r.maximal_cliques) : "skipped");
    line("components", std::to_string(r.components));
    line("avg_shortest_path", r.paths ? real(r.paths->avg_shortest_path) : "null");
    line("diameter", r.paths ? std::to_string(r.paths->diameter) : "null");
    line("avg_betweenness", real(r.avg_betweenness));
    line("avg_closeness", real(r.avg_closeness));
    line("avg_clustering", real(r.avg_clustering));
    return out;
}

std::string histogram_csv(const std::vector<std::size_t>& histogram, bool header) {
    std::string out = header ? "bin_lower,count\n" : "";
    char buf[64];
    for (std::size_t i = 0; i < histogram.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.2f,%zu\n",
                      static_cast<double>(i) / static_cast<double>(histogram.size()), histogram[i]);
        out += buf;
    }
    return out;
}

} // namespace degseq::metrics
