#include <iostream>
#include <vector>

#include "tspan/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tspan::cli::run(std::move(args), std::cout, std::cerr);
}
