#include <iostream>
#include <string>
#include <vector>

#include "polymult/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polymult::run_cli(args, std::cout, std::cerr);
}
