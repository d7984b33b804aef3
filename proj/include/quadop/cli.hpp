#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quadop {

// Runs one CLI invocation. args holds everything after the program name.
// Data output goes to out, diagnostics to err. Exit codes: 0 success,
// 2 parse error, 3 invalid input, 4 violated internal invariant.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadop
