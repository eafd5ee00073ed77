#include <iostream>
#include <string>
#include <vector>

#include "gv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gv::run_cli(args, std::cout, std::cerr);
}
