#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/types.hpp"

namespace degseq {

/// Degrees together with a permutation that reads them in non-increasing order.
///
/// Ties are ordered by ascending vertex id at construction; decrements may
/// later permute vertices inside a block of equal degree. A decrement swaps
/// the vertex with the last slot of its block and then lowers it by one,
/// which keeps the order sorted in O(1).
///
/// block_start(x) is the number of entries strictly greater than x, i.e. the
/// leftmost sorted position whose degree is <= x. When x is present this is
/// the first slot of its block, and count_at_least(j) = block_start(j - 1)
/// is the Erdős–Gallai weight w_j.
class SortedView {
public:
    SortedView() = default;

    /// Degrees must be non-negative.
    explicit SortedView(std::vector<Degree> degrees);

    std::size_t size() const noexcept { return degrees_.size(); }

    Degree degree(Vertex v) const noexcept { return degrees_[v]; }
    std::span<const Degree> degrees() const noexcept { return degrees_; }

    /// Degree held at sorted position pos (0-based).
    Degree at(std::size_t pos) const noexcept { return degrees_[perm_[pos]]; }
    Vertex vertex_at(std::size_t pos) const noexcept { return perm_[pos]; }
    std::size_t position_of(Vertex v) const noexcept { return inv_perm_[v]; }

    std::span<const Vertex> perm() const noexcept { return perm_; }
    std::span<const std::size_t> inv_perm() const noexcept { return inv_perm_; }

    std::size_t block_start(Degree value) const noexcept;
    std::size_t count_at_least(Degree j) const noexcept {
        return j <= 0 ? degrees_.size() : block_start(j - 1);
    }

    /// Throws Error(underflow) when the degree of v is already zero.
    void decrement_one(Vertex v);

private:
    std::vector<Degree> degrees_;
    std::vector<Vertex> perm_;
    std::vector<std::size_t> inv_perm_;
    // greater_[x] = |{ i : degrees_[i] > x }| for x in [0, max degree].
    std::vector<std::size_t> greater_;
};

/// Mutable state of one generation run: residual degrees, their sorted view,
/// and the edges assigned so far.
class ResidualState {
public:
    explicit ResidualState(const DegreeSequence& seq);

    std::size_t size() const noexcept { return view_.size(); }
    Degree residual(Vertex v) const noexcept { return view_.degree(v); }
    std::span<const Degree> residuals() const noexcept { return view_.degrees(); }
    Degree residual_sum() const noexcept { return residual_sum_; }
    const SortedView& view() const noexcept { return view_; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept { return adjacency_[v]; }
    bool has_edge(Vertex u, Vertex v) const noexcept;
    std::size_t assigned_edges() const noexcept { return assigned_edges_; }

    /// Records edge (u, v) and lowers both residuals by one.
    ///
    /// Throws self_pair when u == v, underflow when either residual is zero,
    /// duplicate_edge when (u, v) is already assigned. State is untouched on
    /// error.
    void decrement_pair(Vertex u, Vertex v);

    /// Smallest vertex id among those with the minimum positive residual.
    std::optional<Vertex> min_positive_vertex() const noexcept;

private:
    SortedView view_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t assigned_edges_ = 0;
    Degree residual_sum_ = 0;
};

} // namespace degseq
