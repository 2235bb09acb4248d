#pragma once

#include <string>
#include <vector>

namespace parastab {

// Result of one CLI invocation: the process exit code and everything the
// command would print. Exit codes: 0 success, 2 rejected input (the
// output is a JSON object {code, location, message}), 1 internal error.
struct CliResult {
  int code = 0;
  std::string out;
};

// Runs the command line given by args (program name excluded). All
// output is deterministic: JSON objects are serialized with sorted keys
// and rationals as "p/q" strings; indices in JSON are 1-based.
CliResult cli_run(const std::vector<std::string> &args);

// Convenience wrapper for main(): runs, prints, returns the exit code.
int cli_main(int argc, char **argv);

} // namespace parastab
