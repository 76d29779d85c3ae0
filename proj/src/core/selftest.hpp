#pragma once

#include <string>
#include <vector>

namespace pf {

struct SelfCheck {
  std::string name;
  bool ok = false;
  std::string detail;  // failure note or short context; empty when silent
};

// Cross-module invariant suite at reduced ranges, one entry per named check;
// quick shrinks the ranges further.  Exceptions inside a check are caught
// and reported as failures of that check.
std::vector<SelfCheck> run_selftest(bool quick);

}  // namespace pf
