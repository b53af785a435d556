#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrango/arrangement.hpp"

namespace arrango {

struct Classification {
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::size_t size = 0;
  bool real = false;
  bool irreducible = false;
  bool simplicial = false;
  /// "geometric" when chambers were enumerated, "combinatorial" when only
  /// s(A) = 0 could be tested.
  std::string simplicial_test;
  bool supersolvable = false;
  /// Absent when the question does not apply (not real or not simplicial).
  std::optional<bool> crystallographic;
  /// A catalog member with an isomorphic lattice, e.g. "A(9,1)" or "A(C_4)".
  std::optional<std::string> identified;
  std::vector<std::string> notes;
};

/// Irreducible, simplicial and supersolvable arrangements of rank 3 are
/// matched against A(2n,1) and A(4m+1,1) of the same size; in rank >= 4
/// against A(A_l), A(C_l) and A_l^{l-1}.
Classification classify(const Arrangement &a);

}  // namespace arrango
