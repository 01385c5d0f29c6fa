#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hnl::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kConfigError = 2,
  kBudgetRefused = 3,
};

/// Run one invocation (arguments without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Split a manifest line into arguments; single and double quotes group.
std::vector<std::string> split_command_line(const std::string& line);

}  // namespace hnl::cli
