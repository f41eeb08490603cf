// SPDX-License-Identifier: MIT
#include "hexp/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hexp::run_cli(args, std::cout, std::cerr);
}
