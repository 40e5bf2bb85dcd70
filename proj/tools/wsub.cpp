#include <iostream>
#include <string>
#include <vector>

#include "wsub/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wsub::run_cli(args, std::cin, std::cout, std::cerr);
}
