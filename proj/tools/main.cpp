#include "mz/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return mz::run_cli(argc, argv, std::cout, std::cerr);
}
