#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rexlab {

// Runs one command line (without the program name). Returns 0 on success or
// a positive answer, 1 on a negative answer (no match, not equivalent) and
// 2 on any error, after printing a one-line diagnostic to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rexlab
