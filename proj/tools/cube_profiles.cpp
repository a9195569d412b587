#include <iostream>
#include <string>
#include <vector>

#include "cubeprof/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cubeprof::cli::run(args, std::cout, std::cerr);
}
