#pragma once

#include <string>
#include <vector>

namespace fuscat {

// One verified property: name, outcome, worst numerical gap observed (0 for
// exact integer/rational checks), and an optional human-readable note.
struct Check {
  std::string name;
  bool pass = false;
  double gap = 0.0;
  std::string detail;
};

inline bool all_pass(const std::vector<Check>& checks) {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

}  // namespace fuscat
