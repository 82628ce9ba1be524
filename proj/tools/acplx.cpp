#include <iostream>
#include <string>
#include <vector>

#include "acplx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return acplx::run(args, std::cout, std::cerr);
}
