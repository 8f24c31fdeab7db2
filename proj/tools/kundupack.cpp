#include <iostream>
#include <string>
#include <vector>

#include "kundupack/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kundu::cli::run(args, std::cout, std::cerr);
}
