#include <iostream>

#include "pdm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pdm::cli::run(args, std::cout, std::cerr);
}
