#include <iostream>
#include <string>
#include <vector>

#include "graphcomp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return graphcomp::run_cli(args, std::cout, std::cerr, std::cin);
}
