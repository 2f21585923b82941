#include <iostream>

#include "cli/runner.hpp"

int main(int argc, char **argv) {
  return k3atlas::cli::main_entry(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
