#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geobary::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNonConvergence = 2,
  kVerificationFailure = 3,
  kSamplingFailure = 4,
};

/// Runs the geobary command line. `args` excludes the program name.
/// Reports go to `--out` when given, otherwise to `out`; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geobary::cli
