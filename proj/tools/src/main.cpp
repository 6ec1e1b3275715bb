#include <iostream>

#include "conncraft_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return conncraft::cli::run(args, std::cout, std::cerr);
}
