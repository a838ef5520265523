#include <iostream>

#include "nabla/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nabla::run_cli(args, std::cout, std::cerr);
}
