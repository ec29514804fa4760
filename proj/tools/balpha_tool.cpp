#include <iostream>
#include <string>
#include <vector>

#include "balpha/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return balpha::run_cli(args, std::cout, std::cerr);
}
