#include <iostream>

#include "luagfx/cli.hpp"

int main(int argc, char** argv) { return luagfx::run_cli(argc, argv, std::cout, std::cerr); }
