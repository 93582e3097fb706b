#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cantor {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

// The eight verification suites, in order. Each one prints a single
// PASS/FAIL line to `out` as it finishes.
std::vector<CriterionResult> run_selfcheck_collect(std::ostream& out);

// Convenience wrapper; true iff every suite passed.
bool run_selfcheck(std::ostream& out);

}  // namespace cantor
