#include <iostream>
#include <string>
#include <vector>

#include "dofregion/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dofregion::cli::run(args, std::cout, std::cerr);
}
