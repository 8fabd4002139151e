#include <iostream>

#include "orbit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return orbit::run_cli(args, std::cout, std::cerr);
}
