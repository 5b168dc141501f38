#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace ukd::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kUsageError = 2,       // bad flags, unparsable or invalid input
  kResourceLimit = 3,    // a budget would be exceeded
  kConsistencyError = 4, // engines disagree, or a fit does not verify
};

/// Runs one invocation. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ukd::cli
