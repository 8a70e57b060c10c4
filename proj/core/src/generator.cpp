#include "degseq/generator.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "degseq/error.hpp"
#include "degseq/graphicality.hpp"

namespace degseq {

PairProbe::PairProbe(const ResidualState& state) : view_(&state.view()) {
    const std::size_t n = view_->size();
    prefix_.resize(n + 1);
    prefix_[0] = 0;
    for (std::size_t pos = 0; pos < n; ++pos) prefix_[pos + 1] = prefix_[pos] + view_->at(pos);
    std::size_t c = 0;
    for (std::size_t i = 1; i <= n && view_->at(i - 1) >= static_cast<Degree>(i) - 1; ++i) c = i;
    durfee_ = c;
}

bool PairProbe::admits(Vertex u, Vertex v) const noexcept {
    const std::size_t n = view_->size();
    const Degree x = view_->degree(u);
    const Degree y = view_->degree(v);

    // 1-based sorted positions a < b that lose one unit, and their old values.
    std::size_t a = 0;
    std::size_t b = 0;
    if (x == y) {
        b = view_->count_at_least(x);
        a = b - 1;
    } else {
        a = view_->count_at_least(std::max(x, y));
        b = view_->count_at_least(std::min(x, y));
    }
    const Degree value_a = std::max(x, y);
    const Degree value_b = std::min(x, y);

    const Degree total = prefix_[n] - 2;
    if (total % 2 != 0) return false;

    auto prefix = [&](std::size_t j) {
        return prefix_[j] - static_cast<Degree>(j >= a) - static_cast<Degree>(j >= b);
    };
    auto weight = [&](std::size_t k) {
        const auto kk = static_cast<Degree>(k);
        return static_cast<Degree>(view_->count_at_least(kk)) - static_cast<Degree>(value_a == kk) -
               static_cast<Degree>(value_b == kk);
    };

    // d_j - (j - 1) is strictly decreasing, so the Durfee predicate can only
    // start failing earlier, at a or b.
    std::size_t durfee = durfee_;
    if (a <= durfee && value_a - 1 < static_cast<Degree>(a) - 1) durfee = a - 1;
    if (b <= durfee && value_b - 1 < static_cast<Degree>(b) - 1) durfee = b - 1;

    for (std::size_t k = 1; k <= durfee; ++k) {
        const auto kk = static_cast<Degree>(k);
        const Degree lhs = prefix(k);
        const Degree wk = weight(k);
        const Degree rhs = kk <= wk ? kk * (kk - 1) + kk * (wk - kk) + total - prefix(static_cast<std::size_t>(wk))
                                    : kk * (kk - 1) + total - lhs;
        if (lhs > rhs) return false;
    }
    return true;
}

bool graphical_after_pair(const ResidualState& state, Vertex u, Vertex v) {
    if (u == v) throw Error(ErrorCode::self_pair, "vertex " + std::to_string(u));
    if (state.residual(u) <= 0 || state.residual(v) <= 0) {
        throw Error(ErrorCode::underflow, "pair (" + std::to_string(u) + ", " + std::to_string(v) +
                                              ") has a zero residual");
    }
    return PairProbe(state).admits(u, v);
}

CandidateSet candidate_set(const ResidualState& state, Vertex u, const CandidateSet* pool,
                           const PairProbe& probe, int workers, std::size_t parallel_threshold) {
    std::vector<Vertex> potential;
    if (pool != nullptr && !pool->empty()) {
        potential = pool->vertices;
    } else {
        const std::size_t n = state.size();
        std::vector<char> adjacent(n, 0);
        for (Vertex w : state.neighbors(u)) adjacent[w] = 1;
        for (Vertex v = 0; v < n; ++v) {
            if (v != u && !adjacent[v] && state.residual(v) > 0) potential.push_back(v);
        }
    }

    std::vector<char> admitted(potential.size(), 0);
    auto test = [&](std::size_t i) {
        const Vertex v = potential[i];
        admitted[i] = v != u && state.residual(v) > 0 && probe.admits(u, v);
    };
    const auto count = static_cast<std::ptrdiff_t>(potential.size());
    if (workers > 1 && potential.size() >= parallel_threshold) {
#pragma omp parallel for num_threads(workers) schedule(static)
        for (std::ptrdiff_t i = 0; i < count; ++i) test(static_cast<std::size_t>(i));
    } else {
        for (std::ptrdiff_t i = 0; i < count; ++i) test(static_cast<std::size_t>(i));
    }

    CandidateSet out;
    for (std::size_t i = 0; i < potential.size(); ++i) {
        if (!admitted[i]) continue;
        out.vertices.push_back(potential[i]);
        out.weight_sum += state.residual(potential[i]);
    }
    return out;
}

CandidateSet candidate_set(const ResidualState& state, Vertex u, const CandidateSet* pool,
                           int workers) {
    return candidate_set(state, u, pool, PairProbe(state), workers);
}

Vertex sample_candidate(const CandidateSet& candidates, std::span<const Degree> residual, Rng& rng) {
    if (candidates.empty() || candidates.weight_sum <= 0) {
        throw Error(ErrorCode::empty_candidates, "nothing to sample from");
    }
    const auto r = static_cast<Degree>(rng.below(static_cast<std::uint64_t>(candidates.weight_sum)));
    Degree running = 0;
    for (Vertex v : candidates.vertices) {
        running += residual[v];
        if (r < running) return v;
    }
    return candidates.vertices.back();
}

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

} // namespace

Generated generate(const DegreeSequence& seq, std::uint64_t seed, const GenOptions& options) {
    const GraphicalityReport verdict = check_graphical(seq, EgOptions{Mode::sequential, 1, 0});
    if (!verdict.graphical) throw Error(ErrorCode::not_graphical, "input sequence is not graphical");

    const int workers = options.mode == Mode::parallel ? std::max(1, options.workers) : 1;
    const std::size_t n = seq.size();

    ResidualState state(seq);
    Generated out{Graph(n), GenRecord{}};
    GenRecord& record = out.record;
    record.seed = seed;
    record.n = n;
    record.trace.reserve(static_cast<std::size_t>(seq.edge_count()));
    Rng rng(seed, Stream::generate);
    CompensatedSum log_prob;

    auto assign = [&](Vertex u, Vertex v) {
        state.decrement_pair(u, v);
        out.graph.add_edge(u, v);
        record.trace.push_back(make_edge(u, v));
    };

    while (const auto active = state.min_positive_vertex()) {
        const Vertex u = *active;
        CandidateSet carried;
        while (state.residual(u) > 0) {
            const PairProbe probe(state);
            CandidateSet candidates = candidate_set(state, u, &carried, probe, workers, options.parallel_threshold);
            if (options.on_candidates) options.on_candidates(u, candidates);
            if (candidates.empty()) {
                throw Error(ErrorCode::internal_stuck,
                            "no candidate for vertex " + std::to_string(u) + " with residual " +
                                std::to_string(state.residual(u)));
            }

            if (options.batch_shortcut && state.residual(u) == static_cast<Degree>(candidates.size())) {
                for (Vertex v : candidates.vertices) assign(u, v);
                ++record.shortcut_batches;
                break;
            }

            const Vertex v = sample_candidate(candidates, state.residuals(), rng);
            log_prob.add(std::log(static_cast<double>(state.residual(v)) /
                                  static_cast<double>(candidates.weight_sum)));
            assign(u, v);
            candidates.vertices.erase(
                std::find(candidates.vertices.begin(), candidates.vertices.end(), v));
            carried = std::move(candidates);
        }
    }

    record.log_prob = log_prob.value();
    return out;
}

} // namespace degseq
