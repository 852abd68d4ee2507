#include "carryless/cli.hpp"
#include "https_get.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#ifndef CARRYLESS_FIXTURE_DIR
#define CARRYLESS_FIXTURE_DIR ""
#endif

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  carryless::cli::Environment env;
  const char* fixtures = std::getenv("CARRYLESS_FIXTURE_DIR");
  env.fixture_dir = (fixtures && *fixtures) ? fixtures : CARRYLESS_FIXTURE_DIR;
  env.remote = carryless::tools::https_get;
  return carryless::cli::run(args, std::cout, std::cerr, env);
}
