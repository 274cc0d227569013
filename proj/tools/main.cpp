#include <iostream>
#include <string>
#include <vector>

#include "cubic/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    bool to_file = false;
    for (const auto& a : args)
        if (a == "-o" || a == "--output" || a.rfind("--output=", 0) == 0)
            to_file = true;
    cubic::CommandResult r = cubic::run_command(args);
    if (!to_file || r.exit_code != 0)
        std::cout << r.output;
    return r.exit_code;
}
