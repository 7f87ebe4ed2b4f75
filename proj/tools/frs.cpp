#include <iostream>
#include <string>
#include <vector>

#include "frs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return frs::run_cli(args, std::cout, std::cerr);
}
