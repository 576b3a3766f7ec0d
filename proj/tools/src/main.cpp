#include <iostream>
#include <string>
#include <vector>

#include "mbar_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mbar::cli::run(args, std::cout, std::cerr);
}
