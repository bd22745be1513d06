#include <iostream>
#include <string>
#include <vector>

#include "hompoisson/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hompoisson::run_command(args, std::cout, std::cerr);
}
