#pragma once

#include <string>
#include <vector>

namespace ratdyn::cli {

struct RunResult {
  int exit_code = 0;
  std::string output;  // stdout
  std::string error;   // stderr
};

/// Runs one invocation; args excludes the program name. Exit codes: 0 on
/// success, 1 on a domain error, 2 on a usage or parse error.
RunResult run(const std::vector<std::string>& args);

}  // namespace ratdyn::cli
