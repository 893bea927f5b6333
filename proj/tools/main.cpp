#include <iostream>
#include <string>
#include <vector>

#include "specfock/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return specfock::cli::run(args, std::cout, std::cerr);
}
