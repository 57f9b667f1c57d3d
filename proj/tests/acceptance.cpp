// Runs the ten acceptance criteria and prints one line per criterion.

#include <cstdio>
#include <string>

#include "qweyl/criteria.hpp"

int main() {
  using namespace qweyl;
  auto results = run_criteria(all_criteria());
  int failed = 0;
  for (const auto& r : results) {
    Verdict v = r.verdict();
    const char* tag = v == Verdict::Pass ? "PASS" : v == Verdict::Skip ? "SKIP" : "FAIL";
    std::printf("%s  criterion %2d  %-45s %zu checks  %.1fs\n", tag, r.id, r.title.c_str(), r.checks.size(), r.seconds);
    for (const auto& c : r.checks)
      if (c.verdict != Verdict::Pass)
        std::printf("        [%s] %s%s%s\n", verdict_name(c.verdict), c.name.c_str(), c.witness.empty() ? "" : ": ", c.witness.c_str());
    for (const auto& f : r.findings) std::printf("        finding: %s\n", f.c_str());
    if (v == Verdict::Fail) ++failed;
  }
  std::printf("%d of %zu criteria failed\n", failed, results.size());
  return failed ? 1 : 0;
}
