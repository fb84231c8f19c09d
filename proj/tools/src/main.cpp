#include <iostream>

#include "nqueens_cli/commands.hpp"

int main(int argc, char** argv) {
  return nqueens::cli::run_cli(argc, argv, std::cout, std::cerr);
}
