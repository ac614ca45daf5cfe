#include <iostream>
#include <string>
#include <vector>

#include "splitegh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return splitegh::run_command(args, std::cout, std::cerr);
}
