// Copyright (c) 2026 the lrough authors. MIT license; see LICENSE.

#include <iostream>
#include <string>
#include <vector>

#include "lrough/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lrough::run(args, std::cout, std::cerr);
}
