#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conncraft::cli {

enum ExitCode : int {
  kOk = 0,
  kFalse = 1,
  kBadInput = 2,
  kPrecondition = 3,
};

/// Runs one command line; `args` excludes the program name. Returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conncraft::cli
