#include "degseq/residual.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "degseq/error.hpp"

namespace degseq {

SortedView::SortedView(std::vector<Degree> degrees) : degrees_(std::move(degrees)) {
    const std::size_t n = degrees_.size();
    Degree max_degree = 0;
    for (Degree d : degrees_) {
        if (d < 0) throw Error(ErrorCode::degree_out_of_range, "negative degree in sorted view");
        max_degree = std::max(max_degree, d);
    }

    perm_.resize(n);
    std::iota(perm_.begin(), perm_.end(), Vertex{0});
    std::stable_sort(perm_.begin(), perm_.end(),
                     [&](Vertex a, Vertex b) { return degrees_[a] > degrees_[b]; });
    inv_perm_.resize(n);
    for (std::size_t pos = 0; pos < n; ++pos) inv_perm_[perm_[pos]] = pos;

    // Histogram, then suffix counts: greater_[x] = sum_{y > x} hist[y].
    std::vector<std::size_t> hist(static_cast<std::size_t>(max_degree) + 1, 0);
    for (Degree d : degrees_) ++hist[static_cast<std::size_t>(d)];
    greater_.assign(hist.size(), 0);
    std::size_t running = 0;
    for (std::size_t x = hist.size(); x-- > 0;) {
        greater_[x] = running;
        running += hist[x];
    }
}

std::size_t SortedView::block_start(Degree value) const noexcept {
    if (value < 0) return 0;
    const auto x = static_cast<std::size_t>(value);
    return x < greater_.size() ? greater_[x] : 0;
}

void SortedView::decrement_one(Vertex v) {
    const Degree x = degrees_[v];
    if (x <= 0) {
        throw Error(ErrorCode::underflow, "vertex " + std::to_string(v) + " has degree 0");
    }
    auto& end_of_block = greater_[static_cast<std::size_t>(x - 1)];
    const std::size_t last = end_of_block - 1;
    const std::size_t pos = inv_perm_[v];
    const Vertex other = perm_[last];
    perm_[last] = v;
    perm_[pos] = other;
    inv_perm_[v] = last;
    inv_perm_[other] = pos;
    --degrees_[v];
    --end_of_block;
}

ResidualState::ResidualState(const DegreeSequence& seq)
    : view_(std::vector<Degree>(seq.degrees().begin(), seq.degrees().end())),
      adjacency_(seq.size()),
      residual_sum_(seq.degree_sum()) {}

bool ResidualState::has_edge(Vertex u, Vertex v) const noexcept {
    const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    const Vertex target = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), target) != a.end();
}

void ResidualState::decrement_pair(Vertex u, Vertex v) {
    if (u >= size() || v >= size()) {
        throw Error(ErrorCode::vertex_out_of_range, "pair (" + std::to_string(u) + ", " +
                                                        std::to_string(v) + ") out of range");
    }
    if (u == v) throw Error(ErrorCode::self_pair, "vertex " + std::to_string(u));
    if (residual(u) == 0 || residual(v) == 0) {
        throw Error(ErrorCode::underflow, "pair (" + std::to_string(u) + ", " + std::to_string(v) +
                                              ") has a zero residual");
    }
    if (has_edge(u, v)) {
        throw Error(ErrorCode::duplicate_edge,
                    "(" + std::to_string(u) + ", " + std::to_string(v) + ") already assigned");
    }
    view_.decrement_one(u);
    view_.decrement_one(v);
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    ++assigned_edges_;
    residual_sum_ -= 2;
}

std::optional<Vertex> ResidualState::min_positive_vertex() const noexcept {
    const std::size_t positive = view_.block_start(0);
    if (positive == 0) return std::nullopt;
    const Degree smallest = view_.at(positive - 1);
    Vertex best = view_.vertex_at(positive - 1);
    for (std::size_t pos = view_.block_start(smallest); pos + 1 < positive; ++pos) {
        best = std::min(best, view_.vertex_at(pos));
    }
    return best;
}

} // namespace degseq
