#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsmt {

// Runs one command (args without the program name) against the given
// streams. Returns the process exit code: 0 success, 1 invalid input,
// 2 rule undefined.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsmt
