#include <iostream>
#include <vector>

#include "fibercalc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fibercalc::run_cli(args, std::cout, std::cerr);
}
