#include <iostream>

#include "dyadic/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dyadic::run(args, std::cout, std::cerr);
}
