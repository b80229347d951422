#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "e6kit/lattice.hpp"

namespace e6kit {

struct Check {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  bool fast = false;
  std::optional<std::vector<Root>> dominance_roots;  // replaces the preset
  std::uint32_t seed = 20240611;
};

constexpr int kCriteria = 10;

// Checks of one acceptance criterion (1..10).
std::vector<Check> run_criterion(int criterion, const VerifyOptions& opt);
std::vector<Check> verify_paper(const VerifyOptions& opt);

// Criterion-level verdict: every check of the criterion passed.
bool criterion_passed(const std::vector<Check>& checks, int criterion);

}  // namespace e6kit
