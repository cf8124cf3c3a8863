#include <iostream>
#include <string>
#include <vector>

#include "qrlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return qrlab::run_cli(args, std::cout, std::cerr);
}
