#include <iostream>
#include <string>
#include <vector>

#include "causalog/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return causalog::runCli(std::move(args), std::cin, std::cout, std::cerr);
}
