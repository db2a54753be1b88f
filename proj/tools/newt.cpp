#include <iostream>

#include "newt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return newt::cli::run(args, std::cout, std::cerr);
}
