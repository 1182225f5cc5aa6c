#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wordmap {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,       // bad flags, unparsable word, unknown generator
  kExitValidation = 2,  // rejected group or table, failed --verify
  kExitBudget = 3,      // enumeration would exceed --budget
};

// Runs one command line (args excludes the program name) and returns the exit
// code.  Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wordmap
