#include <iostream>
#include <string>
#include <vector>

#include "gdold/cli_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gdold::run_cli(args, std::cout, std::cerr);
}
