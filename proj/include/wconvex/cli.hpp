#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wconvex::cli {

/// Runs one command line (without the program name). Exit codes: 0 success
/// or Yes, 1 No answer, 2 usage, parse or input error, 3 benchmark finished
/// with failed tasks (partial results written).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wconvex::cli
