#include <iostream>

#include "magspec/cli/run.hpp"

int main(int argc, char** argv) {
  return magspec::cli::main_entry(argc, argv, std::cout, std::cerr);
}
