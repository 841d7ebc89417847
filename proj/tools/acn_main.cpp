#include <iostream>
#include <string>
#include <vector>

#include "acn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return acn::cli::run_command(args, std::cout, std::cerr);
}
