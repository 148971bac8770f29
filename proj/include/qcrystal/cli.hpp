#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcrystal {

/// Exit codes: 0 success, 1 verification failure or resource limit, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).  Normal output
/// goes to `out`, diagnostics and timings to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcrystal
