#include "wedgeforge/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wedgeforge::cli::run_args(args, std::cout, std::cerr);
}
