#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zrp::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidationFailed = 1,
  kExitConfigError = 2,
  kExitKinematicsError = 3,
  kExitNumericalError = 4,
};

/// Parses "0-16", "0,2,5" or mixtures such as "0-3,7". Throws ConfigError.
std::vector<int> parse_level_list(const std::string& text);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zrp::cli
