#pragma once

#include <compare>
#include <cstdint>

namespace degseq {

// Degree values and prefix sums are 64-bit: sum(d_i) reaches n(n-1), which
// overflows 32 bits for n around 65k.
using Degree = std::int64_t;

// Vertex ids are 0-based everywhere, including file formats.
using Vertex = std::uint32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edge with endpoints ordered so that u < v.
constexpr Edge make_edge(Vertex a, Vertex b) noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
}

enum class Mode { sequential, parallel };

/// Available hardware parallelism, never less than 1.
int default_workers() noexcept;

} // namespace degseq
