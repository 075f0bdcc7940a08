#include <iostream>
#include <string>
#include <vector>

#include "qcs/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return qcs::cli::run(args, std::cout, std::cerr);
}
