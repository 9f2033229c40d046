#include <iostream>

#include "damposc/cli/commands.hpp"

int main(int argc, char** argv) { return damposc::cli::run_cli(argc, argv, std::cout, std::cerr); }
