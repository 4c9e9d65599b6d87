#include <iostream>
#include <string>
#include <vector>

#include "gcol/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return gcol::cli::main(args, std::cout, std::cerr);
}
