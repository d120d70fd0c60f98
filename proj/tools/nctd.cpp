#include <iostream>
#include <string>
#include <vector>

#include "nctd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nctd::cli::run(args, std::cout, std::cerr).exit_code;
}
