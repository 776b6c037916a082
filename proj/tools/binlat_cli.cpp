#include <iostream>

#include "binlat/cli.hpp"

int main(int argc, char** argv) { return binlat::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
