#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace degseq {

enum class ErrorCode {
    malformed_token,
    degree_out_of_range,
    empty_input,
    self_pair,
    underflow,
    duplicate_edge,
    vertex_out_of_range,
    not_graphical,
    empty_candidates,
    internal_stuck,
    too_few_edges,
    no_edges,
    too_large,
    ungraphable,
    equivalence_breach,
    invalid_argument,
    io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Errors signalling that an internal invariant was broken rather than bad input.
bool is_invariant_breach(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace degseq
