#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return celint::run_cli(argc, argv, std::cout, std::cerr); }
