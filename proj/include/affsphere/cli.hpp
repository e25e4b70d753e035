#pragma once

#include <ostream>

namespace affsphere {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitHomeoViolated = 2,
  kExitUnknown = 3,
};

/// Entry point of the affsphere tool; returns the process exit code.
/// Reports go to `out` unless -o is given; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace affsphere
