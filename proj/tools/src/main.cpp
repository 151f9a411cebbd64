#include <iostream>

#include "alif/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return alif::cli::main_entry(args, std::cout, std::cerr);
}
