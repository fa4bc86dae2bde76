#include <iostream>
#include <string>
#include <vector>

#include "cxs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cxs::run(args, std::cin, std::cout, std::cerr);
}
