#include <iostream>
#include <string>
#include <vector>

#include "alvero/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return alvero::cli::run(args, std::cout, std::cerr, alvero::cli::process_environment());
}
