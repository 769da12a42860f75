// Runs every acceptance suite once and prints one line per criterion.
// Usage: acceptance [--seed N]

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "katofan/checks.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 1;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::fprintf(stderr, "usage: %s [--seed N]\n", argv[0]);
      return 2;
    }
  }
  const auto& all = katofan::checks::suites();
  int failed = 0;
  for (std::size_t k = 0; k < all.size(); ++k) {
    auto r = katofan::checks::run_suite(all[k], seed);
    std::printf("%s C%zu %-40s %6zu cases %7.2f s (limit %3.0f s)\n", r.passed ? "PASS" : "FAIL", k + 1,
                r.title.c_str(), r.cases, r.seconds, r.limit_seconds);
    for (const auto& f : r.failures) std::printf("     - %s\n", f.c_str());
    if (!r.passed) ++failed;
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed (seed %llu)\n", static_cast<int>(all.size()) - failed, all.size(),
              static_cast<unsigned long long>(seed));
  return failed == 0 ? 0 : 1;
}
