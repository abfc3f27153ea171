#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>

#include "adarft/log.hpp"

int main(int argc, char** argv) {
  // Several cases exercise the clamp/fallback warnings on purpose; keep them
  // out of the test output unless the caller asks for logs explicitly.
  if (std::getenv("ADARFT_LOG") == nullptr) {
    adarft::set_log_level(adarft::LogLevel::Error);
  }
  return doctest::Context(argc, argv).run();
}
