#pragma once

#include <string>
#include <vector>

namespace multiport {

enum class VerifyLevel { quick, full };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // empty on pass, first violation otherwise
};

/// Runs every module invariant suite. quick covers N <= 3; full extends to
/// N = 4 exhaustively plus sampled N = 5 checks.
std::vector<CheckResult> run_verification(VerifyLevel level);

}  // namespace multiport
