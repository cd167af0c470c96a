#pragma once

#include <string>
#include <vector>

namespace fuscat {

// One release criterion: a sweep with pinned tolerances. `failures` lists
// every individual breach; an empty list means the criterion passed.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string summary;
  std::vector<std::string> failures;
};

// The eight release criteria. max_sum bounds n+k for the even-family sweeps;
// the odd-duality sweeps run to max_sum - 2 and the shuffle oracle to
// max_sum + 2. Tolerances are fixed constants, not parameters.
std::vector<CriterionResult> run_acceptance(int max_sum = 8);

}  // namespace fuscat
