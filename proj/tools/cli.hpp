#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ltlfsynth::cli {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 realizable / success, 1 unrealizable, 2 error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ltlfsynth::cli
