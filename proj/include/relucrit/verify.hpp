#pragma once

#include <string>
#include <vector>

#include "relucrit/families.hpp"

namespace relucrit {

struct CheckResult {
  std::string suite, name;
  bool passed = false;
  std::string detail;
};

const std::vector<std::string>& verify_suites();  // kernel symmetry objective consistency continuation series

// Runs every suite, or only `only` when non-empty (BadInput for an unknown suite).
// A seed file that fails to load or solve is reported as a failed "consistency.seeds" check.
std::vector<CheckResult> run_verify(const std::string& only, const std::string& seed_path = "");

std::string verify_ledger(const std::vector<CheckResult>& r);

}  // namespace relucrit
