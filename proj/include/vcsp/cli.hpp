#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vcsp::cli {

enum ExitCode : int {
  kOk = 0,
  kFormatError = 1,
  kSizeLimit = 2,
  kInternal = 70,
  kUsage = 64,
};

/// Runs the command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vcsp::cli
