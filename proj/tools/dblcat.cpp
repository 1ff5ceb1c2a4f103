#include <iostream>

#include "dblcat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dblcat::run_cli(args, std::cin, std::cout, std::cerr);
}
