#include <iostream>

#include "hunters/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hunters::cli::run(args, std::cout, std::cerr);
}
