#include <iostream>
#include <string>
#include <vector>

#include "izeta/analyze.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return izeta::cli_main(args, std::cout, std::cerr);
}
