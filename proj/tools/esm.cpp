#include <iostream>

#include "esm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return esm::run_cli(args, std::cout, std::cerr);
}
