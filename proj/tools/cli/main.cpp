#include "commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return hyperrec::cli::run_cli(argc, argv, std::cout, std::cerr); }
