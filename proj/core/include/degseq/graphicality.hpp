#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/types.hpp"

namespace degseq {

// Erdős–Gallai graphicality test.
//
// All routines below use 1-based indexing into the non-increasing sequence
// d_1 >= ... >= d_n, matching the inequality
//
//     sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(k, d_i),   k = 1..n,
//
// with prefix sums H (H_0 = 0, H_i = H_{i-1} + d_i) and weights
// w_j = |{ i : d_i >= j }|. Only the first C inequalities are evaluated,
// where C = |{ j : d_j >= j - 1 }| is the corrected Durfee number.
//
// Passing workers > 1 to a primitive runs its OpenMP variant: round-robin
// Durfee scan with a max reduction, chunked prefix sums with an exclusive
// scan of chunk sums, weights via monotone max-writes, and a round-robin
// inequality scan with a shared early-exit flag.

struct GraphicalityReport {
    bool graphical = false;
    bool parity_ok = false;
    std::size_t durfee = 0;
    /// First violated inequality (1-based), canonicalized across modes.
    std::optional<std::size_t> failing_k;
    Degree lhs = 0;
    Degree rhs = 0;

    friend bool operator==(const GraphicalityReport&, const GraphicalityReport&) = default;
};

struct InequalityCheck {
    bool ok = true;
    std::optional<std::size_t> failing_k;
    Degree lhs = 0;
    Degree rhs = 0;

    friend bool operator==(const InequalityCheck&, const InequalityCheck&) = default;
};

struct EgOptions {
    Mode mode = Mode::sequential;
    int workers = default_workers();
    /// Parallel mode falls back to the sequential path below this length.
    std::size_t parallel_threshold = 4096;
};

std::size_t corrected_durfee(std::span<const Degree> sorted, int workers = 1);

/// H_0..H_n; the input need not be sorted.
std::vector<Degree> prefix_sums(std::span<const Degree> degrees, int workers = 1);

/// Weights w_0..w_W with W = max(n, d_1); w_0 = n and w_j counts entries >= j.
std::vector<Degree> compute_weights(std::span<const Degree> sorted, int workers = 1);

/// Evaluates inequalities k = 1..durfee. A parallel run may observe any
/// violation first; the reported index is always the smallest one.
InequalityCheck check_inequalities(std::span<const Degree> prefix, std::span<const Degree> weights,
                                   std::size_t durfee, int workers = 1);

/// Left and right hand side of inequality k using the weight shortcut.
struct InequalitySides {
    Degree lhs;
    Degree rhs;
};
InequalitySides inequality_sides(std::span<const Degree> prefix, std::span<const Degree> weights,
                                 std::size_t k);

/// Full pipeline on an already non-increasing sequence.
GraphicalityReport check_graphical_sorted(std::span<const Degree> sorted,
                                          const EgOptions& options = {});

/// Sorts (descending) and tests. Entries must be non-negative; entries above
/// n-1 are allowed and yield a non-graphical verdict.
GraphicalityReport check_graphical(std::span<const Degree> degrees, const EgOptions& options = {});
GraphicalityReport check_graphical(const DegreeSequence& seq, const EgOptions& options = {});

/// Non-increasing copy; counting sort when the value range allows it.
std::vector<Degree> sort_descending(std::span<const Degree> degrees);

namespace detail {

/// Weight writes contributed by sorted index i (1-based) with the sentinel
/// d_0 = n - 1. Every write is an atomic store-if-larger, so any
/// interleaving of calls over i = 1..n converges to the sequential result.
void apply_weight_updates(std::span<const Degree> sorted, std::size_t i, std::span<Degree> weights);

/// Fills w_j = n for j = 1..d_n. Runs after all apply_weight_updates calls.
void apply_tail_weights(std::span<const Degree> sorted, std::span<Degree> weights);

} // namespace detail

} // namespace degseq
