#include <iostream>
#include <string>
#include <vector>

#include "cascade_duel_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cascade_duel::cli::run(args, std::cout, std::cerr);
}
