#include <iostream>
#include <string>
#include <vector>

#include "polygauss/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return polygauss::run_cli(args, std::cout, std::cerr);
}
