#include <iostream>

#include "twodist/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return twodist::cli::run(args, std::cout, std::cerr);
}
