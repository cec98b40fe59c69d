#pragma once

#include <string>
#include <vector>

namespace dedekind::cli {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;  // first counterexample when failed
};

/// Property checks of every module at reduced bounds.
std::vector<CheckResult> run_selftest();

}  // namespace dedekind::cli
