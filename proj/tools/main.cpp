#include <iostream>
#include <string>
#include <vector>

#include "effparse/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return effparse::cli::run(args, std::cout, std::cerr);
}
