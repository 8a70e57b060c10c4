#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace degseq::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNotGraphical = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kInternalError = 3;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace degseq::cli
