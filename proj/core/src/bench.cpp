#include "degseq/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "degseq/error.hpp"
#include "degseq/generator.hpp"
#include "degseq/graphicality.hpp"

namespace degseq {

namespace {

// Results are written here so the timed calls cannot be optimized away.
volatile std::size_t sink = 0;

template <class Fn>
double time_once(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

template <class Fn>
BenchReport time_rows(std::string target, std::string input, std::span<const int> workers,
                      int repetitions, Fn&& run) {
    BenchReport report{std::move(target), std::move(input), repetitions, {}};
    for (int w : workers) {
        BenchRow row;
        row.workers = w;
        for (int r = 0; r < repetitions; ++r) row.samples.push_back(time_once([&] { run(w); }));
        row.median_seconds = median(row.samples);
        report.rows.push_back(std::move(row));
    }
    const double base = report.rows.front().median_seconds;
    for (auto& row : report.rows) row.speedup = row.workers == 1 ? 1.0 : base / row.median_seconds;
    return report;
}

} // namespace

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

void validate_bench_plan(std::span<const int> workers, int repetitions) {
    if (workers.empty() || workers.front() != 1) {
        throw Error(ErrorCode::invalid_argument, "worker list must start at 1");
    }
    for (std::size_t i = 1; i < workers.size(); ++i) {
        if (workers[i] <= workers[i - 1]) {
            throw Error(ErrorCode::invalid_argument, "worker list must be strictly ascending");
        }
    }
    if (repetitions < kMinBenchRepetitions) {
        throw Error(ErrorCode::invalid_argument, "need at least " +
                                                     std::to_string(kMinBenchRepetitions) +
                                                     " repetitions, got " + std::to_string(repetitions));
    }
}

std::string BenchReport::csv(bool header) const {
    std::string out = header ? "workers,median_seconds,speedup\n" : "";
    char buf[96];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof buf, "%d,%.9f,%.6f\n", row.workers, row.median_seconds, row.speedup);
        out += buf;
    }
    return out;
}

BenchReport bench_graphicality(std::span<const Degree> sorted, std::span<const int> workers,
                               int repetitions, std::string input) {
    validate_bench_plan(workers, repetitions);
    auto options_for = [](int w) { return EgOptions{Mode::parallel, w, 0}; };

    const GraphicalityReport reference = check_graphical_sorted(sorted, options_for(1));
    for (int w : workers) {
        if (check_graphical_sorted(sorted, options_for(w)) != reference) {
            throw Error(ErrorCode::equivalence_breach,
                        "graphicality report differs at " + std::to_string(w) + " workers");
        }
    }

    return time_rows("eg", std::move(input), workers, repetitions, [&](int w) {
        sink = check_graphical_sorted(sorted, options_for(w)).durfee;
    });
}

BenchReport bench_generator(const DegreeSequence& seq, std::uint64_t seed,
                            std::span<const int> workers, int repetitions, std::string input) {
    validate_bench_plan(workers, repetitions);
    auto options_for = [](int w) {
        GenOptions o;
        o.mode = Mode::parallel;
        o.workers = w;
        return o;
    };

    const Generated reference = generate(seq, seed, options_for(1));
    for (int w : workers) {
        if (generate(seq, seed, options_for(w)).record.trace != reference.record.trace) {
            throw Error(ErrorCode::equivalence_breach,
                        "edge trace differs at " + std::to_string(w) + " workers");
        }
    }

    return time_rows("gen", std::move(input), workers, repetitions, [&](int w) {
        sink = generate(seq, seed, options_for(w)).record.trace.size();
    });
}

} // namespace degseq
