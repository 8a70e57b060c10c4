#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "degseq/graph.hpp"
#include "degseq/rng.hpp"

namespace degseq {

struct SwapStats {
    std::uint64_t attempted = 0;
    std::uint64_t accepted = 0;
    std::uint64_t rejected_selfloop = 0;
    std::uint64_t rejected_parallel = 0;
    std::uint64_t rejected_degenerate = 0;
    /// The attempt cap ran out before the requested number of accepted swaps.
    bool capped = false;
};

enum class SwapOutcome { accepted, rejected_selfloop, rejected_parallel, rejected_degenerate };

/// Edges (a,b) = edges[first] and (c,d) = edges[second], with (c,d) read
/// reversed when flip is set; proposes replacing them by (a,d) and (c,b).
struct SwapProposal {
    std::size_t first = 0;
    std::size_t second = 0;
    bool flip = false;
};

/// Applies the proposal if it keeps the graph simple.
///
/// A proposal creating a loop (a == d or c == b) is rejected_selfloop; one
/// whose edges otherwise share an endpoint (a == c or b == d, a no-op) is
/// rejected_degenerate; one recreating an existing edge is
/// rejected_parallel. Rejections leave the graph untouched.
SwapOutcome apply_swap(Graph& g, const SwapProposal& proposal);

/// One uniform proposal (two distinct edge indices plus an orientation bit)
/// applied to g. Throws too_few_edges when m < 2.
bool swap_step(Graph& g, Rng& rng, SwapStats& stats);

/// ceil((m / 2) ln m), the number of accepted swaps that rewires every edge
/// in expectation.
std::uint64_t default_swap_budget(std::size_t m);

struct SwapResult {
    Graph graph;
    SwapStats stats;
};

/// Runs swap_step until `swaps` (default: default_swap_budget) proposals are
/// accepted, or 100x that many attempts have been made.
SwapResult randomize(Graph g, std::optional<std::uint64_t> swaps, Rng& rng);

} // namespace degseq
