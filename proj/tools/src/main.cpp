#include <iostream>
#include <string>
#include <vector>

#include "dedekind_cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return dedekind::cli::run_cli(args, std::cout, std::cerr);
}
