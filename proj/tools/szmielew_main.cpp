#include <iostream>

#include "szmielew/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return szmielew::run_cli(args, std::cout, std::cerr);
}
