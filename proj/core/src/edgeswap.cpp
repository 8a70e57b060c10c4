#include "degseq/edgeswap.hpp"

#include <cmath>
#include <string>

#include "degseq/error.hpp"

namespace degseq {

SwapOutcome apply_swap(Graph& g, const SwapProposal& proposal) {
    const Edge e1 = g.edges()[proposal.first];
    const Edge e2 = g.edges()[proposal.second];
    const Vertex a = e1.u;
    const Vertex b = e1.v;
    const Vertex c = proposal.flip ? e2.v : e2.u;
    const Vertex d = proposal.flip ? e2.u : e2.v;

    if (a == d || c == b) return SwapOutcome::rejected_selfloop;
    if (a == c || b == d) return SwapOutcome::rejected_degenerate;
    if (g.has_edge(a, d) || g.has_edge(c, b)) return SwapOutcome::rejected_parallel;

    g.replace_edge(proposal.first, make_edge(a, d));
    g.replace_edge(proposal.second, make_edge(c, b));
    return SwapOutcome::accepted;
}

bool swap_step(Graph& g, Rng& rng, SwapStats& stats) {
    const std::size_t m = g.edge_count();
    if (m < 2) throw Error(ErrorCode::too_few_edges, "need at least 2 edges, have " + std::to_string(m));

    SwapProposal p;
    p.first = static_cast<std::size_t>(rng.below(m));
    p.second = static_cast<std::size_t>(rng.below(m - 1));
    if (p.second >= p.first) ++p.second;
    p.flip = (rng.next() >> 63) != 0;

    ++stats.attempted;
    switch (apply_swap(g, p)) {
    case SwapOutcome::accepted: ++stats.accepted; return true;
    case SwapOutcome::rejected_selfloop: ++stats.rejected_selfloop; break;
    case SwapOutcome::rejected_parallel: ++stats.rejected_parallel; break;
    case SwapOutcome::rejected_degenerate: ++stats.rejected_degenerate; break;
    }
    return false;
}

std::uint64_t default_swap_budget(std::size_t m) {
    if (m < 2) return 0;
    const double md = static_cast<double>(m);
    return static_cast<std::uint64_t>(std::ceil(md / 2.0 * std::log(md)));
}

SwapResult randomize(Graph g, std::optional<std::uint64_t> swaps, Rng& rng) {
    const std::size_t m = g.edge_count();
    if (m < 2) throw Error(ErrorCode::too_few_edges, "need at least 2 edges, have " + std::to_string(m));

    const std::uint64_t budget = swaps.value_or(default_swap_budget(m));
    const std::uint64_t cap = 100 * budget;
    SwapResult result{std::move(g), {}};
    while (result.stats.accepted < budget) {
        if (result.stats.attempted >= cap) {
            result.stats.capped = true;
            break;
        }
        swap_step(result.graph, rng, result.stats);
    }
    return result;
}

} // namespace degseq
