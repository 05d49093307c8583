#include <iostream>
#include <string>
#include <vector>

#include "gbswitch/harness.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gbswitch::cli::run(args, std::cout, std::cerr);
}
