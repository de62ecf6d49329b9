#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccg/groups.hpp"

namespace ccg {

struct VerifyReport {
  std::string group;
  uint64_t order = 0;
  size_t classes = 0, oracle_classes = 0;
  bool class_equation = false;  // sizes sum to |G|
  bool bijection = false;       // class_of maps oracle classes one-to-one onto the table
  bool sizes = false;
  bool centralizer_orders = false;  // formula order equals the brute-force centralizer
  bool generators = false;          // generated subgroup closure equals that order
  std::vector<std::string> failures;
  bool ok() const { return class_equation && bijection && sizes && centralizer_orders && generators; }
};

// Compares the class table and centralizer formulas of spec with brute force.
// Throws CapExceeded when |G| exceeds cap.
VerifyReport verify_against_oracle(const GroupSpec& spec, uint64_t cap, uint32_t seed = 0);

std::string to_text(const VerifyReport& r);

}  // namespace ccg
