#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "arrango/arrangement.hpp"

namespace arrango {

class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// chi(t) = sum_k coefficients[k] t^k.
struct CharPoly {
  std::vector<long long> coefficients;
  /// mu_q = sum of mu(X) over X of rank q.
  std::vector<long long> mu_by_rank;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  long long operator()(long long t) const;
  /// Integer roots with multiplicity when chi splits over Z into linear
  /// factors; empty optional otherwise.
  std::optional<std::vector<long long>> integer_roots() const;
  std::string to_string() const;
  friend bool operator==(const CharPoly &a, const CharPoly &b) { return a.coefficients == b.coefficients; }
};

CharPoly multiply(const CharPoly &a, const CharPoly &b);
/// prod (t - r_i) times t^extra.
CharPoly poly_from_roots(const std::vector<long long> &roots, std::size_t extra = 0);

/// Flats of L(A) indexed 0..size()-1 in order of nondecreasing rank;
/// id 0 is V and the last id is T(A).
class IntersectionLattice {
 public:
  explicit IntersectionLattice(Arrangement a);

  const Arrangement &arrangement() const { return arr_; }
  std::size_t rank() const { return levels_.size() - 1; }
  std::size_t size() const { return flats_.size(); }
  const Flat &flat(std::size_t id) const { return flats_[id]; }
  const IndexSet &set(std::size_t id) const { return flats_[id].hyperplanes; }
  std::size_t rank_of(std::size_t id) const { return flats_[id].rank; }
  const std::vector<std::size_t> &level(std::size_t q) const { return levels_[q]; }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return flats_.size() - 1; }
  std::size_t atom(std::size_t hyperplane) const { return atoms_[hyperplane]; }
  std::optional<std::size_t> find(const IndexSet &s) const;
  /// Flats of rank q+1 above x.
  const std::vector<std::size_t> &covers(std::size_t x) const { return up_[x]; }

  /// Reverse inclusion: X <= Y iff Y is a subspace of X.
  bool leq(std::size_t x, std::size_t y) const { return set(x).subset_of(set(y)); }
  std::size_t join(std::size_t x, std::size_t y) const;
  std::size_t meet(std::size_t x, std::size_t y) const;
  std::size_t join_rank(std::size_t x, std::size_t y) const;
  /// Smallest flat whose set contains s.
  std::size_t closure(const IndexSet &s) const;

  long long mobius(std::size_t x) const { return mobius_[x]; }
  /// mu(x, z) for every z (zero when z is not above x).
  std::vector<long long> mobius_from(std::size_t x) const;

  CharPoly char_poly() const;
  /// chi of the restriction A^X, computed on the interval [X, T].
  CharPoly char_poly_restriction(std::size_t x) const;
  /// chi of the localization A_X in the ambient space.
  CharPoly char_poly_localization(std::size_t x) const;

 private:
  Arrangement arr_;
  std::vector<Flat> flats_;
  std::vector<Echelon> spans_;
  std::vector<std::vector<std::size_t>> levels_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::size_t> atoms_;
  std::vector<std::size_t> atom_join_;  // n x n table over hyperplanes
  std::vector<long long> mobius_;
  std::unordered_map<IndexSet, std::size_t> index_;
};

CharPoly char_poly(const Arrangement &a);
long long s_value(const IntersectionLattice &l);
long long s_value(const Arrangement &a);

/// Lattice criterion for simpliciality of an essential rank-3 arrangement.
bool is_simplicial_rank3(const IntersectionLattice &l);

/// Multiset {|A_X| : X in L_2} as size -> count.
std::map<std::size_t, std::size_t> rank2_multiset(const IntersectionLattice &l);

/// X + Y in L(A) for every Y, tested through r(X^Y) + r(XvY) = r(X) + r(Y).
bool is_modular(const IntersectionLattice &l, std::size_t x);
/// Modularity inside the interval [V, within].
bool is_modular_below(const IntersectionLattice &l, std::size_t x, std::size_t within);
/// The literal definition via subspace sums; slower, kept as a cross-check.
bool is_modular_by_sum(const IntersectionLattice &l, std::size_t x);
std::vector<std::size_t> modular_flats(const IntersectionLattice &l);

struct SupersolvableCertificate {
  std::vector<std::size_t> chain;  // flat ids V = X_0 < ... < X_r = T
  std::vector<long long> exponents;
};

std::optional<SupersolvableCertificate> supersolvable_certificate(const IntersectionLattice &l);
std::optional<SupersolvableCertificate> is_supersolvable(const Arrangement &a);

struct Decomposition {
  bool irreducible = false;
  std::vector<IndexSet> blocks;  // connected components of the normals
};

/// Splits the normals into the finest blocks with independent spans.
Decomposition decompose(const Arrangement &a);
bool is_irreducible(const Arrangement &a);

/// Atom bijection inducing an isomorphism L1 -> L2, if one exists.
std::optional<std::vector<std::size_t>> lattice_isomorphism(const IntersectionLattice &l1,
                                                            const IntersectionLattice &l2);

struct HansenMotzkinWitness {
  std::size_t x;  // rank l-1
  std::size_t y;  // rank l-2
  std::size_t hyperplane;
};

HansenMotzkinWitness hansen_motzkin_witness(const IntersectionLattice &l);

/// The lattice of (A_Y)^X, isomorphic to the interval [X, Y].
IntersectionLattice interval(const IntersectionLattice &l, std::size_t x, std::size_t y);

}  // namespace arrango
