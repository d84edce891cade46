#include <iostream>

#include "rdg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rdg::cli_main(args, std::cout, std::cerr);
}
