#include <iostream>

#include "permsim/cli.hpp"

int main(int argc, char** argv) {
    return permsim::run_cli(argc, argv, std::cout, std::cerr);
}
