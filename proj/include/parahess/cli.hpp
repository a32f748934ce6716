#pragma once

#include <iosfwd>

namespace parahess {

/// Process exit codes; stable across releases.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitParse = 2,
  kExitSampling = 3,
  kExitBadPoint = 4,
  kExitNotApplicable = 5,
};

/// Entry point of the parahess tool; the report goes to `out` (or --out),
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace parahess
