#pragma once

#include <string>
#include <vector>

namespace edcrg {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;  // empty on success, failure description otherwise
};

// suite = "quick" (fast subset) or "paper" (all eight checks).
std::vector<CriterionResult> run_suite(const std::string& suite);

}  // namespace edcrg
