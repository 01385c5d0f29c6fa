#include <iostream>
#include <string>
#include <vector>

#include "hnl/tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hnl::cli::run(args, std::cout, std::cerr);
}
