#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace abcopt::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNotSolved = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Lines starting
/// with "# " on `out` carry timing or file-location information only.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abcopt::cli
