#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperspace::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, parse_failure = 2, precondition_failed = 3 };

/// Runs the `hyperspace` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperspace::cli
