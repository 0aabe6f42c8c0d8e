#include <iostream>

#include "x0plus/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return x0plus::run(args, std::cout, std::cerr);
}
