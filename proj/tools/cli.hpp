#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace foldwave::cli {

/// Runs the command line `args` (without the program name) and returns the
/// exit code: 0 ok, 2 input error, 3 kinematic error, 4 design infeasible.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace foldwave::cli
