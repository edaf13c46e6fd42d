#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tricover::cli {

// Worker count for sweep subcommands; unset means hardware concurrency.
inline constexpr const char* kWorkersEnv = "TRICOVER_WORKERS";

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,  // a verification subcommand found a failing inequality
  kUsage = 2,      // bad flags, bad input, or a violated precondition
};

// Runs one command line (without the program name). Output goes to `out`
// unless --out is given; diagnostics and usage text go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tricover::cli
