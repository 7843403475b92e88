#include <iostream>

#include "planevar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return planevar::run_cli(args, std::cout, std::cerr);
}
