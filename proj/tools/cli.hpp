#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fic {

// Parses one invocation (without the program name) and runs it.  Returns
// the process exit code: 0 pass, 1 failed checks or runtime failure, 2
// usage error.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace fic
