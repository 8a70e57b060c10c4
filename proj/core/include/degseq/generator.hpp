#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/graph.hpp"
#include "degseq/residual.hpp"
#include "degseq/rng.hpp"
#include "degseq/types.hpp"

namespace degseq {

/// Vertices that may receive the next edge from the active vertex, in
/// ascending id order, with the sum of their residual degrees.
struct CandidateSet {
    std::vector<Vertex> vertices;
    Degree weight_sum = 0;

    bool empty() const noexcept { return vertices.empty(); }
    std::size_t size() const noexcept { return vertices.size(); }
};

/// Answers "is the residual sequence still graphical after decrementing u
/// and v?" for many pairs against one fixed state.
///
/// Construction is O(n): prefix sums of the sorted residuals and their
/// corrected Durfee number. Each query is O(C) and reads the sorted view
/// through a virtual two-point decrement: lowering a degree-x vertex is the
/// same, in sorted order, as lowering the last slot of the degree-x block, so
/// the decremented sequence differs from the current one in at most two known
/// positions. Queries never mutate shared data and may run concurrently.
class PairProbe {
public:
    explicit PairProbe(const ResidualState& state);

    /// Requires u != v and both residuals positive.
    bool admits(Vertex u, Vertex v) const noexcept;

private:
    const SortedView* view_;
    std::vector<Degree> prefix_;
    std::size_t durfee_ = 0;
};

/// Throws self_pair when u == v and underflow when a residual is zero.
bool graphical_after_pair(const ResidualState& state, Vertex u, Vertex v);

/// Admits every v from the potential pool for which the pair (u, v) keeps
/// the residual sequence graphical. Without a pool, the pool is every v != u
/// with a positive residual and no edge to u. Admission tests fan out over
/// `workers` OpenMP threads into an index-aligned bitmap, so the result does
/// not depend on scheduling.
/// Pools smaller than `parallel_threshold` are tested inline.
CandidateSet candidate_set(const ResidualState& state, Vertex u, const CandidateSet* pool,
                           const PairProbe& probe, int workers = 1, std::size_t parallel_threshold = 0);
CandidateSet candidate_set(const ResidualState& state, Vertex u, const CandidateSet* pool,
                           int workers = 1);

/// Picks v with probability residual[v] / weight_sum using exactly one draw:
/// r = rng.below(weight_sum), then the first candidate whose running weight
/// exceeds r.
Vertex sample_candidate(const CandidateSet& candidates, std::span<const Degree> residual, Rng& rng);

struct GenRecord {
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::vector<Edge> trace;
    /// Natural log of the probability of the sampled choices; batch-assigned
    /// edges contribute nothing.
    double log_prob = 0.0;
    std::size_t shortcut_batches = 0;

    std::size_t m() const noexcept { return trace.size(); }
};

struct GenOptions {
    Mode mode = Mode::sequential;
    int workers = 1;
    /// Candidate pools below this size skip the worker team.
    std::size_t parallel_threshold = 64;
    /// Assign every candidate at once when the active residual equals |C|.
    bool batch_shortcut = true;
    /// Called with each freshly computed candidate set (testing hook).
    std::function<void(Vertex, const CandidateSet&)> on_candidates;
};

struct Generated {
    Graph graph;
    GenRecord record;
};

/// Random simple graph with exactly the given degrees.
///
/// Repeatedly takes the least vertex of minimum positive residual and
/// assigns all its edges before moving on. Each edge: compute candidates
/// (reusing the previous candidates as the pool within one vertex phase),
/// batch-assign when the residual equals the candidate count, otherwise
/// sample proportionally to residual degree. The RNG (Stream::generate) is
/// only touched by sampling, so every mode and worker count yields the same
/// trace for a given seed.
///
/// Throws not_graphical for non-graphical input and internal_stuck if no
/// candidate exists (cannot happen for graphical input).
Generated generate(const DegreeSequence& seq, std::uint64_t seed, const GenOptions& options = {});

} // namespace degseq
