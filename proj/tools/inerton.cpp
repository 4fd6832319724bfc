#include <iostream>
#include <string>
#include <vector>

#include "inerton/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return inerton::cli::run(args, std::cout, std::cerr);
}
