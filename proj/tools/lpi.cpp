#include <iostream>

#include "lpi/cli.hpp"

int main(int argc, char** argv) { return lpi::run_cli(argc, argv, std::cout, std::cerr); }
