// One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

#include <cstring>
#include <iostream>

#include "orbitposet/verify.hpp"

int main(int argc, char** argv) {
  orbitposet::VerifyOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) options.quick = true;
  }
  const auto results = orbitposet::run_acceptance(options);
  std::cout << orbitposet::format_results(results);
  for (const auto& r : results) {
    if (!r.passed) return 1;
  }
  return 0;
}
