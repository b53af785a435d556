#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "arrango/scalar.hpp"

namespace arrango {

using Covector = std::vector<Scalar>;
using Matrix = std::vector<Covector>;  // row-major

/// Reduced row echelon form with unit pivots.
struct Echelon {
  Matrix rows;
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;

  std::size_t rank() const { return rows.size(); }
  /// Reduces v against the rows; the result is zero iff v is in the span.
  Covector reduce(Covector v) const;
  bool contains(const Covector &v) const;
  /// Adds a row, keeping the form reduced. Returns false if v was dependent.
  bool insert(Covector v);
};

Echelon rref(const Matrix &rows, std::size_t cols);
std::size_t rank_of(const Matrix &rows, std::size_t cols);

/// Basis of {x : r(x) = 0 for every row r}, in reduced echelon form.
Matrix kernel(const Echelon &e);
/// Canonical (reduced echelon) basis of the row span.
Matrix canonical_span(const Matrix &rows, std::size_t cols);

Scalar dot(const Covector &a, const Covector &b);
Covector add_scaled(const Covector &a, const Scalar &f, const Covector &b);  // a + f*b
Covector scaled(const Covector &a, const Scalar &f);
bool is_zero(const Covector &v);

/// Scales so the first nonzero coordinate is 1; returns the factor c with
/// v = c * result.
Scalar normalize_projective(Covector &v);
/// Scales by a positive number so the first nonzero coordinate is +-1 in
/// ordered fields; returns the sign of the original first nonzero entry.
int normalize_signed(Covector &v);
bool proportional(const Covector &a, const Covector &b);

Scalar determinant(Matrix m);
std::optional<Matrix> inverse(Matrix m);
/// Solves x^T M = v, i.e. coordinates of v in the basis given by the rows of M.
std::optional<Covector> coordinates(const Matrix &basis_rows, const Covector &v);
Matrix multiply(const Matrix &a, const Matrix &b);
Matrix identity(std::size_t n);

/// Fixed-capacity set of hyperplane indices.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}
  static IndexSet of(std::size_t universe, const std::vector<std::size_t> &items);

  std::size_t universe() const { return n_; }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  std::size_t count() const;
  bool empty() const;
  bool subset_of(const IndexSet &o) const;
  IndexSet operator&(const IndexSet &o) const;
  IndexSet operator|(const IndexSet &o) const;
  IndexSet operator-(const IndexSet &o) const;
  std::vector<std::size_t> items() const;
  std::size_t hash() const;
  friend bool operator==(const IndexSet &a, const IndexSet &b) { return a.words_ == b.words_; }
  friend bool operator!=(const IndexSet &a, const IndexSet &b) { return !(a == b); }
  friend bool operator<(const IndexSet &a, const IndexSet &b) { return a.items() < b.items(); }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace arrango

template <>
struct std::hash<arrango::IndexSet> {
  std::size_t operator()(const arrango::IndexSet &s) const { return s.hash(); }
};
