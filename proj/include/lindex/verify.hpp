#pragma once

// Batch property runner behind `lindex verify`: transform invariance of
// the Liouvillian, decomposition round-trip and the fermionic pair algebra
// over seeded random systems.

#include <cstdint>
#include <string>
#include <vector>

namespace lindex {

struct CheckSummary {
  std::string name;
  double tolerance = 0.0;
  double worst = 0.0;  // largest deviation seen
  int passed = 0;
  int total = 0;
};

struct VerifyReport {
  std::vector<CheckSummary> checks;
  int passed = 0;
  int total = 0;

  bool ok() const { return passed == total; }
};

// count >= 1; throws std::invalid_argument otherwise.
VerifyReport run_verification(std::uint64_t seed, int count);

}  // namespace lindex
