#ifndef FPSREV_CLI_HPP
#define FPSREV_CLI_HPP

#include "fpsrev/error.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace fpsrev::cli {

enum ExitCode : int {
    Success = 0,
    Usage = 1,
    Format = 2,
    Precondition = 3,
    Mismatch = 4,
    Resource = 5,
};

int exit_code_for(ErrorCode code);

// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fpsrev::cli

#endif
