#pragma once

#include <string>
#include <vector>

namespace gravity {

// Runs the command-line front end. Exit codes: 0 success, 1 failed
// verification, 2 usage or expression parse error, 3 I/O error.
int run_cli(const std::vector<std::string>& args);

}  // namespace gravity
