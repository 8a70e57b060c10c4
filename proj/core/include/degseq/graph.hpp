#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "degseq/types.hpp"

namespace degseq {

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept normalized (u < v) in insertion order, indexed by a hash
/// set for membership tests, and mirrored into per-vertex neighbor lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Throws self_pair, duplicate_edge or vertex_out_of_range.
    void add_edge(Vertex a, Vertex b);
    bool has_edge(Vertex a, Vertex b) const noexcept;

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const noexcept { return adjacency_[v]; }
    Degree degree(Vertex v) const noexcept { return static_cast<Degree>(adjacency_[v].size()); }
    std::vector<Degree> degree_vector() const;

    /// Replaces the edge stored at index with e (normalized). The caller is
    /// responsible for e being absent and loop-free.
    void replace_edge(std::size_t index, Edge e);

    /// True when edges, the hash index and neighbor lists agree and the edge
    /// set has no loops or duplicates.
    bool consistent() const;

    /// Same edge set, regardless of insertion order.
    bool same_edges(const Graph& other) const;

private:
    static std::uint64_t key(Edge e) noexcept {
        return (static_cast<std::uint64_t>(e.u) << 32) | e.v;
    }
    void unlink(Vertex a, Vertex b);

    std::vector<Edge> edges_;
    std::unordered_set<std::uint64_t> index_;
    std::vector<std::vector<Vertex>> adjacency_;
};

// Edge files: one `u v` pair per line, 0-based ids, `#` comments. A
// `# n <count>` comment fixes the vertex count so that trailing isolated
// vertices survive a round trip; without it n = max id + 1.

Graph parse_edges(std::string_view text);
std::string format_edges(const Graph& g);

} // namespace degseq
