#include <iostream>
#include <string>
#include <vector>

#include "omegamod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return omegamod::cli::run(args, std::cout, std::cerr);
}
