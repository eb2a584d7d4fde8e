#include <iostream>

#include "coble_cli/commands.hpp"

int main(int argc, char** argv) { return coble::cli::run(argc, argv, std::cout, std::cerr); }
