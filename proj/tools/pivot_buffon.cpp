#include <iostream>
#include <string>
#include <vector>

#include "pivot_buffon/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return pivot_buffon::cli::run(args, std::cout, std::cerr);
}
