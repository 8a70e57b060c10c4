#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degseq/types.hpp"

namespace degseq {

/// Immutable degree sequence d_0..d_{n-1} with 0 <= d_i <= n-1.
///
/// The empty sequence (n = 0) is valid and is graphical by convention.
class DegreeSequence {
public:
    DegreeSequence() = default;

    /// Throws Error(degree_out_of_range) if any entry is negative or exceeds n-1.
    explicit DegreeSequence(std::vector<Degree> degrees);

    std::size_t size() const noexcept { return degrees_.size(); }
    bool empty() const noexcept { return degrees_.empty(); }
    Degree degree_sum() const noexcept { return sum_; }
    Degree operator[](std::size_t i) const noexcept { return degrees_[i]; }
    std::span<const Degree> degrees() const noexcept { return degrees_; }

    /// Number of edges of any realization (only meaningful when the sum is even).
    Degree edge_count() const noexcept { return sum_ / 2; }

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<Degree> degrees_;
    Degree sum_ = 0;
};

/// Tokenizes whitespace-separated decimal integers, dropping `#` comments.
///
/// Rejects non-numeric tokens (malformed_token, with the 0-based token
/// index), negative values (degree_out_of_range) and inputs without any
/// token (empty_input). Values above n-1 are kept: a sequence such as
/// (4,3,2,1) is a legitimate question for a graphicality test.
std::vector<Degree> parse_degrees(std::string_view text);

/// parse_degrees followed by full DegreeSequence validation.
DegreeSequence parse_sequence(std::string_view text);

/// Degrees joined by single spaces with a trailing newline.
std::string format_sequence(std::span<const Degree> degrees);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

} // namespace degseq
