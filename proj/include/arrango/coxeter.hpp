#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arrango/chambers.hpp"

namespace arrango {

class CoxeterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Labeled graph on vertices 0..n-1; an edge {i,j} carries m >= 3 and
/// absent pairs have m = 2.
struct CoxeterGraph {
  std::size_t vertices = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edges;  // keys have i < j

  std::size_t label(std::size_t i, std::size_t j) const;
  bool has_edge(std::size_t i, std::size_t j) const { return label(i, j) > 2; }
  void set_label(std::size_t i, std::size_t j, std::size_t m);
  /// Edge list with 1-based vertices, e.g. "1-2:3 2-3:4".
  std::string to_string() const;
  friend bool operator==(const CoxeterGraph &, const CoxeterGraph &) = default;
  friend auto operator<=>(const CoxeterGraph &, const CoxeterGraph &) = default;
};

/// Vertex j of the graph is frame.roots[j].
CoxeterGraph coxeter_graph(const ChamberComplex &cc, const Frame &f);
/// Labels |A_X| for the joins of the given atoms in any lattice.
CoxeterGraph coxeter_graph(const IntersectionLattice &l, const std::vector<std::size_t> &hyperplanes);
/// The graph with vertex v renamed to perm[v].
CoxeterGraph relabel(const CoxeterGraph &g, const std::vector<std::size_t> &perm);
/// A vertex permutation carrying g to h with labels, by brute force.
std::optional<std::vector<std::size_t>> graph_isomorphism(const CoxeterGraph &g, const CoxeterGraph &h);
bool is_connected(const CoxeterGraph &g);

struct SimpleGraph {
  std::size_t vertices = 0;
  std::set<std::pair<std::size_t, std::size_t>> edges;  // i < j
  bool has_edge(std::size_t i, std::size_t j) const;
};

/// Contraction along the edge {a, b}: the merged vertex takes a's number,
/// b disappears and the vertices above b move down by one.
SimpleGraph contract_edge(const CoxeterGraph &g, std::size_t a, std::size_t b);

using IntMatrix = std::vector<std::vector<long long>>;

enum class CartanType { A, C, D, Dprime, Other };
std::string to_string(CartanType t);

struct CartanMatrix {
  IntMatrix entries;
  CartanType type = CartanType::Other;
};

/// The matrix of the given type and size as displayed in the standard table;
/// empty when the type has no member of that size.
IntMatrix cartan_template(CartanType t, std::size_t l);
/// Matches by simultaneous row and column permutation, for l <= 8.
CartanType classify_cartan_type(const IntMatrix &c);
/// Present when every entry is an integer.
std::optional<CartanMatrix> cartan_matrix(const Matrix &c);
std::optional<CartanMatrix> cartan_matrix(const ChamberComplex &cc, const Frame &f);

/// Roots come in pairs (r, -r) with the first nonzero coordinate of r
/// positive, sorted by hyperplane; frames[k] is the basis of chamber k.
struct RootSystem {
  std::vector<Covector> roots;
  std::vector<Frame> frames;
  std::vector<Matrix> coefficients;  // c_coefficients of frames[k]
};

struct ClosureResult {
  std::optional<RootSystem> system;
  /// On inconsistency: the chamber reached twice and the chamber it was
  /// reached from the second time.
  std::optional<std::pair<std::size_t, std::size_t>> conflict;
};

/// Transports the start frame through every chamber by the sigma maps in
/// breadth-first order and checks that repeat visits agree up to order.
ClosureResult root_system_closure(const ChamberComplex &cc, const Frame &start);
/// Each hyperplane carries exactly the two roots r and -r.
bool is_reduced(const ChamberComplex &cc, const RootSystem &r);
/// Every root is an integer combination of every chamber basis.
bool in_integer_span(const RootSystem &r);

struct CrystallographicWitness {
  Frame start;
  RootSystem system;
  std::vector<CartanMatrix> cartan;  // per chamber
};

/// Searches the chambers in breadth-first order from chamber 0 for one whose
/// basis rescales to integer coefficients, then tries every such rescaling.
/// A rescaling whose chamber types all lie in {A, C, D, D'} is preferred.
std::optional<CrystallographicWitness> is_crystallographic(const ChamberComplex &cc);

/// Numbered graph classes reached by transporting a frame across walls:
/// next[s][i] is the class after crossing the wall numbered i.
struct GraphChangeDiagram {
  std::vector<CoxeterGraph> classes;
  std::vector<std::vector<std::size_t>> next;
  std::vector<std::size_t> frames;  // (chamber, numbering) pairs per class
  /// False when one class and wall lead to two different classes.
  bool deterministic = true;
};

GraphChangeDiagram graph_change_diagram(const ChamberComplex &cc, const Frame &start);
GraphChangeDiagram graph_change_diagram(const ChamberComplex &cc);
/// Equal up to a common renumbering of vertices and walls.
bool equivalent(const GraphChangeDiagram &d1, const GraphChangeDiagram &d2);

/// The chamber (K_a)^H of A^H for H the wall sigma_a(b)^perp of K_a, with the
/// restricted basis numbered like contract_edge(graph, a, b).
struct RestrictedChamber {
  Derived restriction;
  std::vector<std::size_t> hyperplanes;  // in the restriction
  std::vector<Covector> roots;           // in the coordinates of H
  CoxeterGraph graph;
};

RestrictedChamber restricted_chamber(const ChamberComplex &cc, const Frame &f, std::size_t a, std::size_t b);

}  // namespace arrango
