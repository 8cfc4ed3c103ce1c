#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quatroots {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the randomized invariant suites of every module. Each suite draws
/// from its own generator seeded from `seed`, so results are reproducible.
std::vector<CheckResult> run_verification(std::uint64_t seed);

}  // namespace quatroots
