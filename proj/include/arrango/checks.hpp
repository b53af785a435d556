#pragma once

#include <string>
#include <vector>

#include "arrango/coxeter.hpp"

namespace arrango {

struct CheckSuite {
  std::string id;
  std::string title;
};

struct CheckResult {
  std::string id;
  bool passed = true;
  std::vector<std::string> details;  // one line per fact checked, failures first marked FAIL
};

/// The property suites known to `check`, in acceptance order.
const std::vector<CheckSuite> &check_suites();
/// Throws std::invalid_argument for an unknown id.
CheckResult run_check(const std::string &id);

/// Transition tables of the three irreducible rank-3 reflection-type
/// arrangements, written down with the numbering of the standard drawing.
GraphChangeDiagram expected_diagram(const std::string &name);  // "A(6,1)", "A(8,1)", "A(9,1)"

}  // namespace arrango
