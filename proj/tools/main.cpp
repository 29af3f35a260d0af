#include <iostream>
#include <string>
#include <vector>

#include "hopflim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hopflim::cli::run(args, std::cout, std::cerr);
}
