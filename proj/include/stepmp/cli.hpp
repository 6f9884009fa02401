#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stepmp::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Entry point behind the `stepmp` executable. Subcommands: approx, simulate,
/// compare, verify. Reports go to --out (atomically) or to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stepmp::cli
