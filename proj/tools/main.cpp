#include <iostream>

#include "parahoric/cli.hpp"

int main(int argc, char** argv) {
    return parahoric::cli::run(argc, argv, std::cout, std::cerr);
}
