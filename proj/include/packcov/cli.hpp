#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace packcov {

// Runs one command given the argument vector (program name excluded), writing
// regular output to `out` and diagnostics to `err`. Returns the process exit
// code: 0 success, 1 validation failure, 2 usage or I/O error, 3 domain
// violation (asymmetric polygon, parameter out of range, optimizer failure).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace packcov
