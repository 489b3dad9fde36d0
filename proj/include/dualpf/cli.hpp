#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dualpf::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kNotConnected = 3,
  kNoConvergence = 4,
  kBadPerturbation = 5,
  kVerifyFailed = 6,
};

/// Runs one command line; normal output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dualpf::cli
