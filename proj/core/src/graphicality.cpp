#include "degseq/graphicality.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cassert>
#include <limits>
#include <memory>
#include <string>

#include "degseq/error.hpp"

namespace degseq {

namespace {

void store_max(Degree& slot, Degree value) noexcept {
    std::atomic_ref<Degree> ref(slot);
    Degree current = ref.load(std::memory_order_relaxed);
    while (value > current &&
           !ref.compare_exchange_weak(current, value, std::memory_order_relaxed)) {
    }
}

std::size_t weight_extent(std::span<const Degree> sorted) {
    const std::size_t n = sorted.size();
    const auto top = sorted.empty() ? 0 : static_cast<std::size_t>(sorted.front());
    return std::max(n, top) + 1;
}

void prefix_sums_into(std::span<const Degree> d, std::span<Degree> out, int workers) {
    const std::size_t n = d.size();
    out[0] = 0;
    if (workers <= 1 || n == 0) {
        Degree running = 0;
        for (std::size_t i = 0; i < n; ++i) {
            running += d[i];
            out[i + 1] = running;
        }
        return;
    }

    const int team = workers;
    const std::size_t chunk = (n + static_cast<std::size_t>(team) - 1) / static_cast<std::size_t>(team);
    std::vector<Degree> offsets(static_cast<std::size_t>(team) + 1, 0);

#pragma omp parallel num_threads(team)
    {
#pragma omp for schedule(static, 1)
        for (int k = 0; k < team; ++k) {
            const std::size_t x = std::min(n, static_cast<std::size_t>(k) * chunk);
            const std::size_t y = std::min(n, x + chunk);
            Degree s = 0;
            for (std::size_t i = x; i < y; ++i) s += d[i];
            offsets[static_cast<std::size_t>(k) + 1] = s;
        }

#pragma omp single
        for (std::size_t k = 1; k < offsets.size(); ++k) offsets[k] += offsets[k - 1];

#pragma omp for schedule(static, 1)
        for (int k = 0; k < team; ++k) {
            const std::size_t x = std::min(n, static_cast<std::size_t>(k) * chunk);
            const std::size_t y = std::min(n, x + chunk);
            Degree q = offsets[static_cast<std::size_t>(k)];
            for (std::size_t i = x; i < y; ++i) {
                q += d[i];
                out[i + 1] = q;
            }
        }
    }
}

void weights_into(std::span<const Degree> sorted, std::span<Degree> w, int workers) {
    const std::size_t n = sorted.size();
    const std::size_t extent = w.size();
    if (workers <= 1) {
        std::fill(w.begin(), w.end(), 0);
        // Plain writes: in sequential order every write to w_j is at least as
        // large as the previous one.
        Degree prev = static_cast<Degree>(n) - 1;
        for (std::size_t i = 1; i <= n; ++i) {
            const Degree di = sorted[i - 1];
            if (di < prev) {
                for (Degree j = prev; j > di; --j) w[static_cast<std::size_t>(j)] = static_cast<Degree>(i - 1);
                if (di >= 1) w[static_cast<std::size_t>(di)] = static_cast<Degree>(i);
            }
            prev = di;
        }
        detail::apply_tail_weights(sorted, w);
        if (extent > 0) w[0] = static_cast<Degree>(n);
        return;
    }

#pragma omp parallel num_threads(workers)
    {
#pragma omp for schedule(static)
        for (std::size_t j = 0; j < extent; ++j) w[j] = 0;

#pragma omp for schedule(static)
        for (std::size_t i = 1; i <= n; ++i) detail::apply_weight_updates(sorted, i, w);

        const Degree tail = n == 0 ? 0 : sorted[n - 1];
#pragma omp for schedule(static)
        for (Degree j = 1; j <= tail; ++j) w[static_cast<std::size_t>(j)] = static_cast<Degree>(n);
    }
    if (extent > 0) w[0] = static_cast<Degree>(n);
}

bool violated(std::span<const Degree> prefix, std::span<const Degree> weights, std::size_t k) {
    const auto [lhs, rhs] = inequality_sides(prefix, weights, k);
    return lhs > rhs;
}

InequalityCheck failure_at(std::span<const Degree> prefix, std::span<const Degree> weights,
                           std::size_t k) {
    const auto [lhs, rhs] = inequality_sides(prefix, weights, k);
    return InequalityCheck{false, k, lhs, rhs};
}

} // namespace

namespace detail {

void apply_weight_updates(std::span<const Degree> sorted, std::size_t i, std::span<Degree> weights) {
    const std::size_t n = sorted.size();
    const Degree prev = i == 1 ? static_cast<Degree>(n) - 1 : sorted[i - 2];
    const Degree di = sorted[i - 1];
    if (di >= prev) return;
    // Writes of i-1 = 0 (first index) cannot raise a zero-initialized slot.
    if (i > 1) {
        for (Degree j = prev; j > di; --j) {
            store_max(weights[static_cast<std::size_t>(j)], static_cast<Degree>(i - 1));
        }
    }
    if (di >= 1) store_max(weights[static_cast<std::size_t>(di)], static_cast<Degree>(i));
}

void apply_tail_weights(std::span<const Degree> sorted, std::span<Degree> weights) {
    if (sorted.empty()) return;
    const auto n = static_cast<Degree>(sorted.size());
    for (Degree j = sorted.back(); j >= 1; --j) weights[static_cast<std::size_t>(j)] = n;
}

} // namespace detail

std::size_t corrected_durfee(std::span<const Degree> sorted, int workers) {
    const std::size_t n = sorted.size();
    if (workers <= 1) {
        std::size_t c = 0;
        for (std::size_t i = 1; i <= n && sorted[i - 1] >= static_cast<Degree>(i) - 1; ++i) c = i;
        return c;
    }

    std::size_t c = 0;
    const auto stride = static_cast<std::size_t>(workers);
#pragma omp parallel for num_threads(workers) schedule(static, 1) reduction(max : c)
    for (int k = 0; k < workers; ++k) {
        std::size_t local = 0;
        for (std::size_t i = static_cast<std::size_t>(k) + 1;
             i <= n && sorted[i - 1] >= static_cast<Degree>(i) - 1; i += stride) {
            local = i;
        }
        c = std::max(c, local);
    }
    return c;
}

std::vector<Degree> prefix_sums(std::span<const Degree> degrees, int workers) {
    std::vector<Degree> out(degrees.size() + 1);
    prefix_sums_into(degrees, out, workers);
    return out;
}

std::vector<Degree> compute_weights(std::span<const Degree> sorted, int workers) {
    std::vector<Degree> w(weight_extent(sorted));
    weights_into(sorted, w, workers);
    return w;
}

InequalitySides inequality_sides(std::span<const Degree> prefix, std::span<const Degree> weights,
                                 std::size_t k) {
    const std::size_t n = prefix.size() - 1;
    const auto kk = static_cast<Degree>(k);
    const Degree wk = k < weights.size() ? weights[k] : 0;
    const Degree total = prefix[n];
    const Degree lhs = prefix[k];
    if (kk <= wk) {
        return {lhs, kk * (kk - 1) + kk * (wk - kk) + total - prefix[static_cast<std::size_t>(wk)]};
    }
    return {lhs, kk * (kk - 1) + total - prefix[k]};
}

InequalityCheck check_inequalities(std::span<const Degree> prefix, std::span<const Degree> weights,
                                   std::size_t durfee, int workers) {
    if (workers <= 1) {
        for (std::size_t k = 1; k <= durfee; ++k) {
            if (violated(prefix, weights, k)) return failure_at(prefix, weights, k);
        }
        return {};
    }

    std::atomic<bool> flag{true};
    std::size_t observed = std::numeric_limits<std::size_t>::max();
    const auto stride = static_cast<std::size_t>(workers);
#pragma omp parallel for num_threads(workers) schedule(static, 1) reduction(min : observed)
    for (int k = 0; k < workers; ++k) {
        for (std::size_t i = static_cast<std::size_t>(k) + 1;
             i <= durfee && flag.load(std::memory_order_relaxed); i += stride) {
            if (violated(prefix, weights, i)) {
                flag.store(false, std::memory_order_relaxed);
                observed = std::min(observed, i);
                break;
            }
        }
    }
    if (observed == std::numeric_limits<std::size_t>::max()) return {};

    // Which violation a worker sees first depends on scheduling; report the
    // smallest violated index so both modes agree.
    for (std::size_t k = 1; k <= observed; ++k) {
        if (violated(prefix, weights, k)) return failure_at(prefix, weights, k);
    }
    return failure_at(prefix, weights, observed);
}

GraphicalityReport check_graphical_sorted(std::span<const Degree> sorted, const EgOptions& options) {
    assert(std::is_sorted(sorted.begin(), sorted.end(), std::greater<>{}));
    GraphicalityReport report;
    const std::size_t n = sorted.size();
    if (n == 0) {
        report.graphical = true;
        report.parity_ok = true;
        return report;
    }

    const bool parallel = options.mode == Mode::parallel && options.workers > 1 &&
                          n >= options.parallel_threshold;
    const int workers = parallel ? options.workers : 1;

    report.durfee = corrected_durfee(sorted, workers);

    auto prefix_buffer = std::make_unique_for_overwrite<Degree[]>(n + 1);
    const std::span<Degree> prefix(prefix_buffer.get(), n + 1);
    prefix_sums_into(sorted, prefix, workers);

    report.parity_ok = prefix[n] % 2 == 0;
    if (!report.parity_ok) return report;

    const std::size_t extent = weight_extent(sorted);
    auto weight_buffer = std::make_unique_for_overwrite<Degree[]>(extent);
    const std::span<Degree> weights(weight_buffer.get(), extent);
    weights_into(sorted, weights, workers);

    const InequalityCheck check = check_inequalities(prefix, weights, report.durfee, workers);
    report.graphical = check.ok;
    report.failing_k = check.failing_k;
    report.lhs = check.lhs;
    report.rhs = check.rhs;
    return report;
}

std::vector<Degree> sort_descending(std::span<const Degree> degrees) {
    Degree top = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] < 0) {
            throw Error(ErrorCode::degree_out_of_range,
                        "vertex " + std::to_string(i) + " has negative degree");
        }
        top = std::max(top, degrees[i]);
    }
    std::vector<Degree> out(degrees.begin(), degrees.end());
    if (static_cast<std::size_t>(top) > 4 * degrees.size() + 64) {
        std::sort(out.begin(), out.end(), std::greater<>{});
        return out;
    }
    std::vector<std::size_t> counts(static_cast<std::size_t>(top) + 1, 0);
    for (Degree d : degrees) ++counts[static_cast<std::size_t>(d)];
    std::size_t pos = 0;
    for (std::size_t v = counts.size(); v-- > 0;) {
        std::fill_n(out.begin() + static_cast<std::ptrdiff_t>(pos), counts[v], static_cast<Degree>(v));
        pos += counts[v];
    }
    return out;
}

GraphicalityReport check_graphical(std::span<const Degree> degrees, const EgOptions& options) {
    const std::vector<Degree> sorted = sort_descending(degrees);
    return check_graphical_sorted(sorted, options);
}

GraphicalityReport check_graphical(const DegreeSequence& seq, const EgOptions& options) {
    return check_graphical(seq.degrees(), options);
}

} // namespace degseq
