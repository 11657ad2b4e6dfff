#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> seed_env;
  if (const char* s = std::getenv("BWAK_SEED")) seed_env = s;
  return bwak::cli::run(args, std::cout, std::cerr, seed_env);
}
