#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gwp/report.hpp"

namespace gwp::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

struct CommandResult {
  int exit_code = kOk;
  /// What the command printed on stdout (table or JSON).
  std::string output;
  /// Diagnostics for stderr.
  std::string error;
  Report report;
};

/// Runs one gwp invocation. args[0] is the program name.
///
/// Subcommands: moments, cumulants, rtransform, verify-catalan, freeness,
/// relations, embed-check. Exit 0 when every row verifies, 1 when some row
/// fails, 2 on usage or input errors.
CommandResult execute_command(const std::vector<std::string>& args);

/// execute_command wired to streams; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gwp::cli
