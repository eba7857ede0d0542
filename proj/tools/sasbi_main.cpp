#include <iostream>
#include <string>
#include <vector>

#include "sasbi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sasbi::cli::run(args, std::cout, std::cerr);
}
