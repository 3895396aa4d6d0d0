#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropf::cli {

/// Runs one tropf invocation. `args` excludes the program name.
/// Returns the process exit code: 0 ok, 2 parse, 3 precondition, 4 internal.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropf::cli
