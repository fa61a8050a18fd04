#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::optional<std::string> env;
  if (char const* b = std::getenv("QUANDELIER_BUDGET")) {
    env = b;
  }
  return quandelier::cli::run(args, std::cout, std::cerr, env);
}
