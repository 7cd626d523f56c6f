// verify.hpp — the acceptance suite: one entry per criterion, each printing a
// pass/fail line with its pinned tolerance and runtime.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spextral {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string suite;  // "formulas", "oracles" or "spectral"
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// suite: "all" or one of the suite tags. gated additionally runs the
// minutes-scale order-10 exhaustive checks.
std::vector<CriterionResult> run_acceptance(const std::string& suite, bool gated,
                                            std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace spextral
