#pragma once

#include <ostream>
#include <span>
#include <string>

namespace dedekind::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Regular output goes to `out`, diagnostics to `err`.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dedekind::cli
