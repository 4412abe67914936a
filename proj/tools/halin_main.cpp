#include <iostream>

#include "halin/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return halin::cli_main(args, std::cout, std::cerr);
}
