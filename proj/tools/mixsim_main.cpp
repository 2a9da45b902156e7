#include <iostream>
#include <string>
#include <vector>

#include "mixsim/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mixsim::cli::dispatch(args, std::cout, std::cerr);
}
