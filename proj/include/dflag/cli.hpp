#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dflag {

/// Exit codes of the dflag tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (program name excluded) against the given
/// streams and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dflag
