#include <iostream>

#include "latcount/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return latcount::cli::run(args, std::cout, std::cerr);
}
