#include <iostream>

#include "pregroup/cli.hpp"

int main(int argc, char** argv) { return pregroup::run_cli(argc, argv, std::cout, std::cerr, std::cin); }
