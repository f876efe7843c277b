#include <iostream>
#include <vector>

#include "sigmaforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sigmaforge::run_cli(args, std::cout, std::cerr);
}
