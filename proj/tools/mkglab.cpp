#include <iostream>

#include "mkg/cli.hpp"

int main(int argc, char** argv) {
    return mkg::cli::run(argc, argv, std::cout, std::cerr);
}
