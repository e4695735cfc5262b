#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace causalog {

// Full command-line driver. `args` excludes the program name. Returns the
// process exit code: 0 success (for solve: at least one model; for
// equiv/leq: the relation holds), 1 for a negative outcome, 2 for parse,
// cap, or I/O errors.
int runCli(std::vector<std::string> args, std::istream& in, std::ostream& out,
           std::ostream& err);

}  // namespace causalog
