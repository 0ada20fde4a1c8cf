#include <iostream>
#include <string>
#include <vector>

#include "evec/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return evec::run_command(args, std::cout, std::cerr).exit_code;
}
