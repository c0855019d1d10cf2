#include <iostream>
#include <vector>

#include "leosys/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return leosys::run_cli(args, std::cin, std::cout, std::cerr);
}
