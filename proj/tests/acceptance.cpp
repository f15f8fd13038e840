#include <cstdio>
#include <algorithm>
#include <cstdlib>

#include "hypercone/suite.hpp"

int main() {
  hypercone::SuiteOptions opts;
  if (const char* s = std::getenv("HYPERCONE_SEED")) opts.seed = std::strtoull(s, nullptr, 10);
  hypercone::SuiteResult r = hypercone::run_suite(opts);
  int n = 0;
  for (const auto& c : r.checks) {
    ++n;
    std::printf("criterion %d: %s %s (%.2fs, limit %.0fs)\n", n, c.passed() ? "PASS" : "FAIL", c.name.c_str(),
                c.seconds, c.time_limit);
    if (!c.passed()) std::printf("  %s\n", c.to_json().dump().c_str());
  }
  std::printf("seed %llu, %d/%zu passed, %.2fs\n", static_cast<unsigned long long>(r.seed),
              static_cast<int>(std::count_if(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.passed(); })),
              r.checks.size(), r.wall_seconds);
  return r.all_passed() ? 0 : 1;
}
