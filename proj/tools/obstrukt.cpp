#include <iostream>
#include <string>
#include <vector>

#include "obstrukt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return obstrukt::run_cli(args, std::cout, std::cerr);
}
