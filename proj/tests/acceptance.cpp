// One PASS/FAIL line per acceptance criterion, then the failing checks.
#include <cstdio>
#include <iostream>
#include <map>

#include "e6kit/verify.hpp"

using namespace e6kit;

int main() {
  static const std::map<int, const char*> titles = {
      {1, "W(E6) order and conjugacy classes"},
      {2, "products of reflections table"},
      {3, "invariant dimensions and toric rank cross-check"},
      {4, "sublattices and orbits table"},
      {5, "incidence relations"},
      {6, "monodromy determinant"},
      {7, "toric ranks of boundary configurations"},
      {8, "nodal-curve section computations"},
      {9, "divisor class identities"},
      {10, "property checks"},
  };
  VerifyOptions opt;
  std::map<int, std::vector<Check>> by;
  for (int k = 1; k <= kCriteria; ++k) by[k] = run_criterion(k, opt);

  int failed = 0;
  for (const auto& [k, checks] : by) {
    bool ok = criterion_passed(checks, k);
    failed += !ok;
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", k, titles.at(k));
  }
  for (const auto& [k, checks] : by)
    for (const auto& c : checks)
      if (!c.pass) std::printf("  [%d] %s: %s\n", k, c.name.c_str(), c.detail.c_str());
  std::printf("%d of %d criteria passed\n", kCriteria - failed, kCriteria);
  return failed == 0 ? 0 : 1;
}
