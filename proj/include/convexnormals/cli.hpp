#pragma once

#include <ostream>

namespace cvxn {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitBoundViolated = 1,
  kExitUnsupported = 2,
  kExitParse = 3,
  kExitGeometry = 4,
  kExitIo = 5,
  kExitUsage = 64,
};

/// Runs one `cvxn` invocation. Primary output goes to `out`, diagnostics and
/// machine-readable error records (one JSON object per line) to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cvxn
