#pragma once

#include <string>
#include <vector>

namespace cma {

struct SelftestCase {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Golden checks for the published worked examples.
std::vector<SelftestCase> run_selftest();

}  // namespace cma
