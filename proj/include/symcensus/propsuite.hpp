#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symcensus {

struct PropertyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PropSuiteResult {
  std::vector<PropertyCheck> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// Randomized/exhaustive invariant batteries, deterministic for a fixed seed:
//   s-arc-formula   exhaustive enumeration vs n*d*(d-1)^(s-1), s <= 7
//   fold-parity     >= 500 random voltage covers per |K| in {2..7} over
//                   non-bipartite bases never produce an odd bipartite cover
//   ct-structure    derived-graph CT groups are semiregular on vertices and
//                   edges; the quotient by CT is isomorphic to the base
//   brute-force-aut engine |Aut| equals the n!-scan count (all graphs with
//                   n <= 5, random graphs at n in {6,7,8})
//   quotient-drop   the doubled-cycle quotient (twin cycle by fibre swap) is
//                   flagged: semiregular subgroup, valency 4 -> 2, not a
//                   covering
PropSuiteResult run_property_suite(std::uint64_t seed);

// "PASS name: detail" / "FAIL name: detail", one line per check.
std::string format(const PropSuiteResult& result);

}  // namespace symcensus
