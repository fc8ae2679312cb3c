#pragma once

#include <string>
#include <vector>

#include "dlct/types.hpp"

namespace dlct {

// Outcome of one named identity or property on one instance. For identities quantified over
// an index, lhs/rhs are taken at the first failing index (or the first index when all hold).
struct CheckResult {
  std::string check;
  std::string instance;
  bool pass = false;
  Value lhs = 0;
  Value rhs = 0;
};

inline bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace dlct
