#include <iostream>

#include "actionlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return actionlab::run(args, std::cout, std::cerr);
}
