#include <iostream>
#include <string>
#include <vector>

#include "su2hom/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const su2hom::cli::RunResult result = su2hom::cli::run(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
