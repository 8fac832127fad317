#include <iostream>
#include <string>
#include <vector>

#include "steinhaus/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return steinhaus::cli::run(args, std::cout, std::cerr);
}
