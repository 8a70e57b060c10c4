#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "degseq/graph.hpp"
#include "degseq/types.hpp"

namespace degseq {

// Desk-scale degree sequences. All results are sorted non-increasing and
// graphical; an odd sum is fixed by lowering one maximal positive entry.

/// Degrees drawn i.i.d. with P(d) proportional to d^-gamma on [1, dmax]
/// (dmax = 0 picks floor(sqrt(n))), redrawn up to 100 times until graphical.
/// Deterministic in (n, gamma, dmax, seed). Throws ungraphable or
/// invalid_argument.
std::vector<Degree> synth_powerlaw(std::size_t n, double gamma, Degree dmax, std::uint64_t seed);

/// n copies of d. Throws invalid_argument unless 0 <= d <= n - 1.
std::vector<Degree> synth_regular(std::size_t n, Degree d);

/// Degree vector of an existing graph.
std::vector<Degree> degrees_from_graph(const Graph& g);

/// Lowers the first maximal positive entry by one when the sum is odd.
void force_even_sum(std::vector<Degree>& degrees);

} // namespace degseq
