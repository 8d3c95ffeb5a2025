#pragma once

#include <string>
#include <vector>

namespace brauerlab::cli {

/// Exit codes: 0 success, 1 domain or input error, 2 usage error.
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command; `args` excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace brauerlab::cli
