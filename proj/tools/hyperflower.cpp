#include <iostream>

#include "hyperflower/cli.hpp"

int main(int argc, char** argv) { return hyperflower::run_cli(argc, argv, std::cout, std::cerr); }
