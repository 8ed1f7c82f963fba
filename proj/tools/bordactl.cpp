#include <iostream>

#include "borda/cli.hpp"

int main(int argc, char** argv) { return borda::run_cli(argc, argv, std::cout, std::cerr); }
