#include "degseq/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "degseq/error.hpp"
#include "degseq/graphicality.hpp"
#include "degseq/rng.hpp"

namespace degseq {

namespace {

constexpr int kMaxDraws = 100;

bool graphical(const std::vector<Degree>& sorted) {
    return check_graphical_sorted(sorted, EgOptions{Mode::sequential, 1, 0}).graphical;
}

} // namespace

void force_even_sum(std::vector<Degree>& degrees) {
    if (std::accumulate(degrees.begin(), degrees.end(), Degree{0}) % 2 == 0) return;
    auto top = std::max_element(degrees.begin(), degrees.end());
    if (top != degrees.end() && *top > 0) --*top;
}

std::vector<Degree> synth_powerlaw(std::size_t n, double gamma, Degree dmax, std::uint64_t seed) {
    if (n < 2) throw Error(ErrorCode::invalid_argument, "power-law sequence needs n >= 2");
    if (!(gamma > 0.0)) throw Error(ErrorCode::invalid_argument, "gamma must be positive");
    if (dmax == 0) dmax = static_cast<Degree>(std::sqrt(static_cast<double>(n)));
    if (dmax < 1 || dmax > static_cast<Degree>(n) - 1) {
        throw Error(ErrorCode::invalid_argument,
                    "dmax " + std::to_string(dmax) + " outside [1, " + std::to_string(n - 1) + "]");
    }

    std::vector<double> cdf(static_cast<std::size_t>(dmax));
    double running = 0.0;
    for (Degree d = 1; d <= dmax; ++d) {
        running += std::pow(static_cast<double>(d), -gamma);
        cdf[static_cast<std::size_t>(d - 1)] = running;
    }
    for (double& c : cdf) c /= running;

    Rng rng(seed, Stream::synth);
    std::vector<Degree> out(n);
    for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
        for (Degree& d : out) {
            const double u = rng.uniform();
            const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            d = std::min<Degree>(dmax, static_cast<Degree>(it - cdf.begin()) + 1);
        }
        force_even_sum(out);
        std::sort(out.begin(), out.end(), std::greater<>{});
        if (graphical(out)) return out;
    }
    throw Error(ErrorCode::ungraphable, "power-law(gamma=" + std::to_string(gamma) + ", dmax=" +
                                            std::to_string(dmax) + "), n=" + std::to_string(n) +
                                            ": no graphical draw in 100 attempts");
}

std::vector<Degree> synth_regular(std::size_t n, Degree d) {
    if (d < 0 || (n > 0 && d > static_cast<Degree>(n) - 1) || (n == 0 && d != 0)) {
        throw Error(ErrorCode::invalid_argument,
                    "degree " + std::to_string(d) + " impossible with n = " + std::to_string(n));
    }
    std::vector<Degree> out(n, d);
    force_even_sum(out);
    std::sort(out.begin(), out.end(), std::greater<>{});
    if (!graphical(out)) {
        throw Error(ErrorCode::ungraphable, "regular(" + std::to_string(d) + "), n=" + std::to_string(n));
    }
    return out;
}

std::vector<Degree> degrees_from_graph(const Graph& g) {
    return g.degree_vector();
}

} // namespace degseq
