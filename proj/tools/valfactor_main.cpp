#include <iostream>

#include "valfactor/cli.hpp"

int main(int argc, char** argv) {
    return valfactor::run_cli(argc, argv, std::cout, std::cerr);
}
