#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lhca::verify {

inline constexpr uint64_t kDefaultSeed = 0x90150;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the full verification suite: reference state tables and PN columns,
/// characteristic polynomials, concatenation identities, the full 2^20 cycle
/// census, the linear-complexity ladder, binomial rows and periods, the
/// closed-form/recurrence cross-check, shrinking-generator linearization, and
/// the randomized property suites (deterministic under the given seed).
std::vector<CheckResult> run_all(uint64_t seed = kDefaultSeed);

}  // namespace lhca::verify
