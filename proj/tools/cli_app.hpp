#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vbcm {
namespace cli {

/// Runs the command line tool on the given arguments (without the program
/// name). Results go to `out`, diagnostics to `err`. Returns the process exit
/// code: 0 success, 1 usage error, 2 validation error, 3 failed mathematical
/// precondition.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cli
}  // namespace vbcm
