// Acceptance suite: runs each acceptance invariant at the default bounds and
// prints one pass/fail line per criterion. Exits nonzero if any fails.

#include <cstdio>

#include "kfp/suite.hpp"

int main() {
  const kfp::SizeProfile profile = kfp::SizeProfile::named("default");
  const auto& names = kfp::acceptance_invariants();
  int failures = 0;
  for (size_t i = 0; i < names.size(); ++i) {
    kfp::InvariantResult r;
    try {
      r = kfp::run_invariant(names[i], profile);
    } catch (const std::exception& e) {
      r.name = names[i];
      r.pass = false;
      r.details = std::string("exception: ") + e.what();
    }
    std::printf("criterion %2zu %s %-30s [%s] %s (%.1fs)\n", i + 1, r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.bound.c_str(), r.details.c_str(), r.seconds);
    std::fflush(stdout);
    if (!r.pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
