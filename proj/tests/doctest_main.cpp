// Shared test main: forwards --seed to the corpus generator before any test
// runs; SMALE_SEED in the environment still takes precedence.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstring>

#include "test_util.hpp"

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--seed") == 0)
      smalehom::testutil::set_seed(
          static_cast<unsigned>(std::strtoul(argv[i + 1], nullptr, 10)));
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
