#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace glc::cli {

enum ExitCode : int {
  kOk = 0,
  kFalseVerdict = 1,
  kUsage = 2,
  kBudget = 3,
  kInvariant = 4,
};

/// Runs one invocation; `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glc::cli
