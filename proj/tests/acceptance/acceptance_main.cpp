// Runs every acceptance criterion and prints one PASS/FAIL line each.
#include <cstdio>

#include "wittzeta/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& c : wittzeta::acceptance::criteria()) {
    const auto r = wittzeta::acceptance::run(c);
    std::printf("[%s] %d %-36s %7.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
