#include <iostream>
#include <string>
#include <vector>

#include "roughlim/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return roughlim::run_cli(args, std::cout, std::cerr);
}
