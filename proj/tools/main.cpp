#include <iostream>

#include "matchext/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return matchext::run_cli(args, std::cout, std::cerr);
}
