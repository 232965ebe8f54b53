#include <iostream>
#include <string>
#include <vector>

#include "vulngraph/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return vulngraph::run_cli(args, std::cin, std::cout, std::cerr);
}
