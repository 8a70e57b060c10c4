#pragma once

#include <optional>

#include "degseq/error.hpp"

namespace degseq::testing {

/// Code of the degseq::Error thrown by fn, or nullopt if it returned.
template <class Fn>
std::optional<ErrorCode> error_code_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

} // namespace degseq::testing
