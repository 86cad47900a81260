// Acceptance gate: runs every criterion at its stated size and tolerance and
// prints one pass/fail line per criterion.
#include <cstdio>

#include "nagata/suites.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--quick") quick = true;
    if (arg == "--seed" && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
  }
  auto results = nagata::run_acceptance_suites(seed, quick);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %-42s instances=%-4d failures=%-3d %.0f ms\n",
                r.pass() ? "PASS" : "FAIL", r.name.c_str(), r.instances, r.failures,
                r.elapsed_ms);
    if (!r.pass()) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
              results.size());
  return failed == 0 ? 0 : 1;
}
