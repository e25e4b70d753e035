#include <iostream>

#include "affsphere/cli.hpp"

int main(int argc, char** argv) { return affsphere::run_cli(argc, argv, std::cout, std::cerr); }
