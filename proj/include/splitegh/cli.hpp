#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splitegh {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_infeasible = 1,  // not realizable, bound violated, not regular
  exit_usage = 2,       // parse or argument errors
  exit_internal = 3,    // an internal invariant failed
};

/// Runs one invocation; args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splitegh
