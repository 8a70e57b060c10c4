#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/types.hpp"

namespace degseq {

inline constexpr int kMinBenchRepetitions = 5;

struct BenchRow {
    int workers = 1;
    double median_seconds = 0.0;
    /// median at one worker divided by this row's median.
    double speedup = 1.0;
    std::vector<double> samples;
};

struct BenchReport {
    std::string target;
    std::string input;
    int repetitions = 0;
    std::vector<BenchRow> rows;

    /// `workers,median_seconds,speedup` rows.
    std::string csv(bool header = false) const;
};

/// Strong-scaling run of the parallel graphicality test on a non-increasing
/// sequence. Before any timing, the report at every worker count must equal
/// the one-worker report (else equivalence_breach). Only the test call is
/// timed, on a monotonic clock.
BenchReport bench_graphicality(std::span<const Degree> sorted, std::span<const int> workers,
                               int repetitions, std::string input);

/// Same for the parallel generator with a fixed seed; the gate compares
/// edge traces.
BenchReport bench_generator(const DegreeSequence& seq, std::uint64_t seed,
                            std::span<const int> workers, int repetitions, std::string input);

/// Throws invalid_argument unless the list is strictly ascending, starts at
/// 1, and repetitions >= kMinBenchRepetitions.
void validate_bench_plan(std::span<const int> workers, int repetitions);

double median(std::vector<double> values);

} // namespace degseq
