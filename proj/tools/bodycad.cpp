#include <iostream>

#include "bodycad/cli.hpp"

int main(int argc, char** argv) { return bodycad::run_cli(argc, argv, std::cout, std::cerr); }
