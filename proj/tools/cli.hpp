#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mseg::tools {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kBoundExceeded = 2,
  kVerificationFailure = 3,
  kUsage = 64,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err` as a single JSON line.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace mseg::tools
