#include <iostream>

#include "nzeta/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nzeta::cli::run(args, std::cout, std::cerr);
}
