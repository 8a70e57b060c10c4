#pragma once

#include <cstdint>
#include <random>

namespace degseq {

__extension__ typedef unsigned __int128 uint128;

/// Independent random streams derived from one user seed.
enum class Stream : std::uint64_t {
    generate = 1,
    swap = 2,
    synth = 3,
    bench = 4,
};

/// SplitMix64 finalizer applied to seed + golden-ratio multiple of the stream
/// tag. Every subcommand seeds its generator through this, so `--seed` alone
/// determines all randomness.
std::uint64_t derive_seed(std::uint64_t seed, Stream stream) noexcept;

/// 64-bit Mersenne Twister with fixed-width conversions so draws are
/// reproducible across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    Rng(std::uint64_t seed, Stream stream) : engine_(derive_seed(seed, stream)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound) from exactly one draw (multiply-shift).
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>((static_cast<uint128>(next()) * bound) >> 64);
    }

    /// Uniform double in [0, 1) from the top 53 bits of one draw.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

} // namespace degseq
