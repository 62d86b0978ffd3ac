#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace drgcay::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kResourceCap = 3,
  kTheoremViolation = 4,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drgcay::cli
