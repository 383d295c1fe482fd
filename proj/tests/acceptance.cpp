// SPDX-License-Identifier: Apache-2.0
#include <cstdio>

#include "pbwff/verify.hpp"

int main() {
  int failed = 0;
  pbwff::run_acceptance({}, [&](const pbwff::CriterionResult& r) {
    std::printf("[%s] %2d %s (%.2fs): %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  });
  std::printf("%d of 11 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
