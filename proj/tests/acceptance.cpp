// Acceptance run: one PASS/FAIL line per criterion, then the individual
// failures. Exit status is 0 when the failing checks are exactly the known
// deviations below; anything else (new failures, or a known deviation that
// starts passing) is an error.

#include <cstdio>
#include <set>
#include <string>

#include "hyperlat/golden.hpp"
#include "hyperlat/verify.hpp"

using namespace hyperlat;

namespace {

// The table lists level 16 (Euler phi 8) for E9; 8 A^-1 is already even
// integral for the bundled E9 lattice, whose theta series agrees with the
// printed list, so the minimal level is 8.
const std::set<std::string> kKnownDeviations = {"invariants E9"};

const char* kTitles[] = {
    "",
    "counting of higher roots",
    "printed Gram matrices",
    "invariants table",
    "dual quotients",
    "theta prefixes",
    "kissing classification",
    "rank and projection",
    "root integrality",
    "character identification",
    "series identities",
    "property suites",
};

}  // namespace

int main() {
  VerifyOptions o;
  o.full = true;
  const auto results = run_checks(golden_table(), o);
  const auto summary = summarize(results);

  for (const auto& s : summary) {
    std::printf("%s criterion %d (%s): %zu/%zu checks, %.2f s%s%s\n", s.passed ? "PASS" : "FAIL", s.criterion,
                kTitles[s.criterion], s.checks - s.failures, s.checks, s.seconds, s.passed ? "" : " -- ",
                s.first_failure.c_str());
  }

  std::set<std::string> failing;
  for (const auto& r : results)
    if (!r.passed) {
      failing.insert(r.name);
      std::printf("  failed [%d] %s: %s\n", r.criterion, r.name.c_str(), r.detail.c_str());
    }

  bool expected = summary.size() == 11;
  for (const auto& name : failing)
    if (!kKnownDeviations.count(name)) {
      std::printf("unexpected failure: %s\n", name.c_str());
      expected = false;
    }
  for (const auto& name : kKnownDeviations)
    if (!failing.count(name)) {
      std::printf("known deviation no longer reproduces: %s\n", name.c_str());
      expected = false;
    }
  std::printf("%s\n", expected ? "acceptance run matches the recorded state" : "acceptance run has unexpected results");
  return expected ? 0 : 1;
}
