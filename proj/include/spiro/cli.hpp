#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spiro::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidation = 2,
  kDegenerate = 3,
  kInternal = 4,
};

/// Entry point of the `spiro` tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spiro::cli
