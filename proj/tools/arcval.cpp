#include <iostream>
#include <string>
#include <vector>

#include "arcval/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return arcval::cli::run_main(args, std::cout);
}
