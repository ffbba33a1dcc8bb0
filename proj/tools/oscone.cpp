#include <iostream>

#include "oscone/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return oscone::cli::run(std::move(args), std::cout, std::cerr);
}
