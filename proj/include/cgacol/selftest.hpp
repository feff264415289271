#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cgacol/multivector.hpp"

namespace cgacol {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the embedded identity checks (null-basis relations, the point
/// inner-product distance law, degenerate-segment and degenerate-capsule
/// reductions, singleton fold) under `metric`.
std::vector<SelftestCheck> run_selftest_checks(const Metric& metric = Metric::conformal());

/// Prints one "PASS|FAIL <name>  <detail>" line per check; returns true when
/// all pass.
bool run_selftest(std::ostream& out, const Metric& metric = Metric::conformal());

}  // namespace cgacol
