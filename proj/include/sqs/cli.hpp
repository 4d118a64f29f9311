#pragma once

#include <iosfwd>

namespace sqs {

/// Exit codes beyond 0 (success) and 1 (operation ran, negative outcome).
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitResource = 4;

/// Runs the `sqs` command line. Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sqs
