#include "degseq/rng.hpp"

namespace degseq {

std::uint64_t derive_seed(std::uint64_t seed, Stream stream) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(stream);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace degseq
