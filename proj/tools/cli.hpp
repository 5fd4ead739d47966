#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zhat::cli {

inline constexpr const char* kToolVersion = "zhat 1.0.0";

/// Runs the command line `args` (without the program name). Returns the exit code:
/// 0 success, 1 failed check, 2 input or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zhat::cli
