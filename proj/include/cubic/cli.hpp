#pragma once

#include <string>
#include <vector>

namespace cubic {

struct CommandResult {
    int exit_code = 0; // 0 ok, 1 bad input, 2 failed verification
    std::string output;
};

// Runs one subcommand; args exclude the program name.  With --output the
// artifact is also written to that file.
CommandResult run_command(const std::vector<std::string>& args);

} // namespace cubic
