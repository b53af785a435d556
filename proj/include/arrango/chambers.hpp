#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "arrango/lattice.hpp"

namespace arrango {

class ChamberError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sign vectors are strings over {'+', '-', '0'}, one character per hyperplane.
using SignVector = std::string;

SignVector sign_vector(const Arrangement &a, const Covector &point);

struct Chamber {
  SignVector signs;
  std::vector<std::size_t> walls;      // ascending hyperplane indices
  std::vector<std::size_t> neighbors;  // chamber across walls[k]
};

/// All faces of a real essential arrangement, found flat by flat from the
/// top of the lattice down: the faces inside a flat X are the chambers of
/// A^X, and a face F of X has the class A_Z \ A_X as a wall exactly when
/// F with zeros on A_Z is a face of Z.
class ChamberComplex {
 public:
  explicit ChamberComplex(Arrangement a);
  /// Essentializes first when needed and appends a note saying so.
  static ChamberComplex of(const Arrangement &a, std::vector<std::string> *notes = nullptr);

  const Arrangement &arrangement() const { return lattice_.arrangement(); }
  const IntersectionLattice &lattice() const { return lattice_; }
  std::size_t size() const { return chambers_.size(); }
  const Chamber &chamber(std::size_t k) const { return chambers_[k]; }
  const std::vector<Chamber> &chambers() const { return chambers_; }
  std::optional<std::size_t> find(const SignVector &s) const;
  /// The chamber across hyperplane h, which must be a wall of k.
  std::size_t neighbor(std::size_t k, std::size_t h) const;
  /// Faces lying in the relative interior of a flat, as sign vectors.
  const std::vector<SignVector> &faces(std::size_t flat) const { return faces_[flat]; }
  std::size_t face_count() const;

  /// Sum of the extreme rays of the closed chamber.
  Covector interior_point(std::size_t k) const;
  bool is_simplicial(std::size_t k) const;
  /// Inward wall normals in ascending wall order.
  std::vector<Covector> chamber_basis(std::size_t k) const;

 private:
  IntersectionLattice lattice_;
  std::vector<std::vector<SignVector>> faces_;
  std::vector<std::unordered_map<SignVector, std::size_t>> face_index_;
  std::vector<Chamber> chambers_;
  std::vector<Covector> generic_points_;  // one point per flat
};

bool is_simplicial_geometric(const ChamberComplex &cc);

/// A chamber together with a basis of inward wall normals in a chosen
/// numbering; roots[j] is the normal of hyperplanes[j].
struct Frame {
  std::size_t chamber = 0;
  std::vector<Covector> roots;
  std::vector<std::size_t> hyperplanes;
};

Frame canonical_frame(const ChamberComplex &cc, std::size_t k);
/// Validates a user basis for chamber k, renumbering nothing.
Frame make_frame(const ChamberComplex &cc, std::size_t k, std::vector<Covector> roots);

/// c_ij for i != j from the rank-2 localizations; c_ii = 2 by convention.
Matrix c_coefficients(const ChamberComplex &cc, const Frame &f);
/// The basis {a_j - c_ij a_i} of the adjacent chamber K_i for an arbitrary
/// diagonal value c_ii > 1; any such value gives a basis of K_i.
std::vector<Covector> adjacent_basis(const ChamberComplex &cc, const Frame &f, std::size_t i, const Scalar &cii);
/// Matrix of sigma_i in the basis f.roots.
Matrix reflection_matrix(const Matrix &c, std::size_t i);
/// The frame of K_i with roots sigma_i(a_j), keeping the numbering.
Frame sigma(const ChamberComplex &cc, const Frame &f, std::size_t i);
Frame sigma(const ChamberComplex &cc, const Frame &f, std::size_t i, const Matrix &c);
/// Transports f across the given frame positions in turn.
Frame gallery_basis(const ChamberComplex &cc, const Frame &f, const std::vector<std::size_t> &crossings);

/// Coordinates of v in the basis, when all of them are nonnegative.
std::optional<Covector> nonnegative_coordinates(const std::vector<Covector> &basis, const Covector &v);

// Exact Fourier-Motzkin feasibility for homogeneous systems: is there v with
// s(v) > 0 for s in strict, w(v) >= 0 for w in weak and e(v) = 0 for e in equal?
bool feasible(std::size_t dim, std::vector<Covector> strict, std::vector<Covector> weak = {},
              std::vector<Covector> equal = {});
/// The open cell with the given sign vector is nonempty.
bool cell_feasible(const Arrangement &a, const SignVector &s);
/// H_h meets the closure of the chamber s in dimension l - 1.
bool is_wall_by_feasibility(const Arrangement &a, const SignVector &s, std::size_t h);

}  // namespace arrango
