#include <iostream>
#include <string>
#include <vector>

#include "dilog/harness/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dilog::run_cli(args, std::cout, std::cerr);
}
