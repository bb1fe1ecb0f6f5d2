#pragma once

#include <ostream>

namespace sniep {

/// Exit codes of run_cli.
enum ExitCode : int {
  kExitOk = 0,
  kExitUnknown = 1,       // the verdict is Unknown
  kExitUsage = 2,         // bad arguments, unreadable input, empty grid
  kExitVerifyFailed = 3,  // a matrix failed the eigenvalue check
};

/// Command-line frontend with subcommands check, realize, qroots, perturb,
/// sample and verify. Results go to `out` (or to --out FILE), diagnostics
/// and usage text to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sniep
