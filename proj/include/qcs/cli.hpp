#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcs::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kNonConvergence = 3,
  kIoError = 4,
};

/// Runs the `qcs` command line (eval | figure | verify | sample).
/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Quantity names accepted by `eval`.
const std::vector<std::string>& eval_quantities();

}  // namespace qcs::cli
