#include <iostream>

#include "speh/cli.hpp"

int main(int argc, char** argv) { return speh::run_cli(argc, argv, std::cout, std::cerr); }
