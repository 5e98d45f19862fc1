#include "solvable/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return solvable::cli::run(argc, argv, std::cout, std::cerr); }
