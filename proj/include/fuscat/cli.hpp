#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuscat {

// Command-line entry point. Exit code 0: success, or a verification that
// passed. 1: a verification ran and failed (the report is still printed).
// 2: usage or input error, message on err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuscat
