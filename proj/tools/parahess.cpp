#include <iostream>

#include "parahess/cli.hpp"

int main(int argc, char** argv) { return parahess::run_cli(argc, argv, std::cout, std::cerr); }
