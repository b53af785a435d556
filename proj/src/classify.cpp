#include "arrango/classify.hpp"

#include "arrango/coxeter.hpp"

namespace arrango {

namespace {

struct Candidate {
  std::string name;
  Arrangement arrangement;
};

std::vector<Candidate> candidates(std::size_t rank, std::size_t size) {
  std::vector<Candidate> out;
  if (rank == 3) {
    if (size % 2 == 0 && size >= 6) out.push_back({"A(" + std::to_string(size) + ",1)", gen::A_2n_1(size / 2)});
    if (size % 4 == 1 && size >= 9) out.push_back({"A(" + std::to_string(size) + ",1)", gen::A_4n1_1(size / 4)});
  } else if (rank >= 4) {
    const std::string l = std::to_string(rank);
    if (size == rank * (rank + 1) / 2) out.push_back({"A(A_" + l + ")", gen::braid_A(rank)});
    if (size == rank * rank) out.push_back({"A(C_" + l + ")", gen::refl_C(rank)});
    if (size == rank * rank - 1) out.push_back({"A_" + l + "^" + std::to_string(rank - 1), gen::A_lk(rank, rank - 1)});
  }
  return out;
}

}  // namespace

Classification classify(const Arrangement &input) {
  Classification c;
  c.dim = input.dim();
  c.rank = input.rank();
  c.size = input.size();
  c.real = input.is_real();
  Arrangement a = input;
  if (!input.is_essential()) {
    a = essentialize(input);
    c.notes.push_back("essentialized from dimension " + std::to_string(input.dim()) + " to " +
                      std::to_string(a.dim()));
  }
  IntersectionLattice L(a);
  c.irreducible = is_irreducible(a);
  c.supersolvable = supersolvable_certificate(L).has_value();
  if (c.real) {
    ChamberComplex cc(a);
    c.simplicial = is_simplicial_geometric(cc);
    c.simplicial_test = "geometric";
    if (c.simplicial) c.crystallographic = is_crystallographic(cc).has_value();
  } else {
    c.simplicial = s_value(L) == 0;
    c.simplicial_test = "combinatorial";
    c.notes.push_back("not real: simpliciality tested by s(A) = 0 only");
  }
  if (c.irreducible && c.simplicial && c.supersolvable) {
    for (auto &cand : candidates(c.rank, c.size))
      if (lattice_isomorphism(L, IntersectionLattice(cand.arrangement))) {
        c.identified = cand.name;
        break;
      }
    if (!c.identified && c.rank >= 3) c.notes.push_back("no catalog member with an isomorphic lattice");
  }
  return c;
}

}  // namespace arrango
