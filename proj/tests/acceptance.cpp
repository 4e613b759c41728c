// Acceptance gate: runs every verification criterion and prints one
// pass/fail line per criterion. Exit code 0 only if all pass.
#include <cstdio>

#include "edcrg/verify.hpp"

int main() {
  const auto results = edcrg::run_suite("paper");
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::printf("%s  %d. %s  (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.index, r.name.c_str(),
                r.seconds, r.detail.empty() ? "" : "  -- ", r.detail.c_str());
  }
  return all ? 0 : 1;
}
