#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mseg::tools {

enum class CheckLevel { Quick, Full };

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool ok() const noexcept { return failures == 0; }
};

/// Invariant suites behind `selfcheck`. Quick: contents [−3,3], n ≤ 6.
std::vector<SuiteResult> run_selfcheck(CheckLevel level);

}  // namespace mseg::tools
