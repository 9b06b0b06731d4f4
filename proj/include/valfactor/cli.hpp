#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace valfactor {

// Complete command-line entry point; out and err receive exactly what a
// terminal run would print.  Returns the exit code: 0 success or accept,
// 1 verifier reject or algorithmic diagnostic, 2 input errors.  Never
// throws, whatever the input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace valfactor
