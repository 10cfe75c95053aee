#include <iostream>

#include "tanaka_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tanaka::cli::run(args, std::cout, std::cerr).exit_code;
}
