#include <iostream>

#include "deit/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return deit::run_cli(argc, argv, std::cout, std::cerr);
}
