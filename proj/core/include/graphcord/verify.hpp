#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace graphcord {

struct SuiteResult {
  std::string name;
  bool passed;
  std::string detail;
};

// Self-check suites over all labeled graphs on n vertices (3..6): dual state
// construction, complement-purity symmetry, LC unitary vs graph rule, and the
// LC/concurrence refinement. Exhaustive where feasible, sampled (fixed seed)
// for the unitary check at n >= 5.
std::vector<SuiteResult> run_verification(int n, std::uint64_t seed = 0x6772636fULL);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace graphcord
