#include <cstdlib>
#include <iostream>

#include "vlink/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env;
  if (const char* v = std::getenv("VL_MAX_EXPANSIONS")) env = v;
  return vlink::cli::run(args, std::cin, std::cout, std::cerr, env);
}
