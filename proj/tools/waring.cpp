#include <iostream>
#include <string>
#include <vector>

#include "waring/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return waring::cli::run(args, std::cout, std::cerr);
}
