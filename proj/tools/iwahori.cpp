#include <iostream>

#include "iwahori/cli.hpp"

int main(int argc, char** argv) { return iwahori::run_cli(argc, argv, std::cout, std::cerr); }
