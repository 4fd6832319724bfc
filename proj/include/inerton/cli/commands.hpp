#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace inerton::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,  ///< config violation, failed verification, bad request
  kExitIo = 2,          ///< unreadable/unwritable files, parse failures
};

/// Runs the tool with `args` (args[0] is the program name). Output and
/// diagnostics go to `out` and `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace inerton::cli
