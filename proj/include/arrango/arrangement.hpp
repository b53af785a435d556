#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrango/linalg.hpp"
#include "arrango/scalar.hpp"

namespace arrango {

class ArrangementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Field {
  unsigned order = 1;  // 1 is QQ
  bool real = true;

  bool ordered() const { return real; }
  /// "QQ" or "cyclo N"
  std::string tag() const;
  friend bool operator==(const Field &, const Field &) = default;
};

struct Derived;

/// Central hyperplane arrangement given by canonical normals (first nonzero
/// coordinate equal to 1), pairwise non-proportional. Index order is stable.
class Arrangement {
 public:
  Arrangement() = default;
  explicit Arrangement(std::size_t dim) : dim_(dim) {}

  /// Canonicalizes and deduplicates; columns proportional to an earlier one
  /// are dropped and reported in `warnings`. `min_order` forces the field to
  /// contain Q(zeta_min_order).
  static Arrangement from_matrix(std::size_t dim, const std::vector<Covector> &columns,
                                 std::vector<std::string> *warnings = nullptr, unsigned min_order = 1);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return normals_.size(); }
  bool empty() const { return normals_.empty(); }
  const Covector &normal(std::size_t i) const { return normals_[i]; }
  const std::vector<Covector> &normals() const { return normals_; }
  const Field &field() const { return field_; }
  bool is_real() const { return field_.real; }

  std::size_t rank() const;
  bool is_essential() const { return rank() == dim_; }
  /// Index of the hyperplane with normal proportional to v, if any.
  std::optional<std::size_t> find(const Covector &v) const;

  friend Derived from_matrix_mapped(std::size_t dim, const std::vector<Covector> &columns, unsigned min_order);
  friend bool operator==(const Arrangement &a, const Arrangement &b) {
    return a.dim_ == b.dim_ && a.normals_ == b.normals_;
  }

 private:
  std::size_t dim_ = 0;
  Field field_;
  std::vector<Covector> normals_;
};

/// Result of a construction that keeps track of where source hyperplanes go:
/// image[i] is the target index of source hyperplane i (absent if it
/// disappears), and the transformed source normal equals factor[i] times the
/// target normal.
struct Derived {
  Arrangement arrangement;
  std::vector<std::optional<std::size_t>> image;
  std::vector<Scalar> factor;
};

Derived from_matrix_mapped(std::size_t dim, const std::vector<Covector> &columns, unsigned min_order = 1);

/// A subspace X in L(A): its rank, canonical basis and the set A_X.
struct Flat {
  std::size_t rank = 0;
  Matrix basis;  // reduced echelon basis of X as row vectors
  IndexSet hyperplanes;

  std::size_t dim() const { return basis.size(); }
};

/// The flat cut out by the given hyperplanes.
Flat make_flat(const Arrangement &a, const std::vector<std::size_t> &generators);
/// Hyperplanes of A that contain the subspace spanned by the rows.
IndexSet hyperplanes_containing(const Arrangement &a, const Matrix &subspace);
/// Canonical basis of the subspace X + Y.
Matrix flat_sum(const Flat &x, const Flat &y);
/// The flat equal to the given subspace, if the subspace lies in L(A).
std::optional<Flat> flat_of_subspace(const Arrangement &a, const Matrix &subspace);

Arrangement product(const Arrangement &a1, const Arrangement &a2);
Arrangement localization(const Arrangement &a, const Flat &x);
Arrangement localization(const Arrangement &a, const IndexSet &x);
Derived restriction_mapped(const Arrangement &a, const Flat &x);
Arrangement restriction(const Arrangement &a, const Flat &x);
Derived essentialize_mapped(const Arrangement &a);
Arrangement essentialize(const Arrangement &a);
/// A_X / X: localization followed by essentialization.
Derived quotient_mapped(const Arrangement &a, const Flat &x);
/// A with hyperplane i removed.
Arrangement deletion(const Arrangement &a, std::size_t i);
/// Subarrangement on the given indices, in ascending index order.
Arrangement subarrangement(const Arrangement &a, const IndexSet &indices);

namespace gen {

Arrangement boolean(std::size_t l);
/// Essential form of the type A_l reflection arrangement in dimension l.
Arrangement braid_A(std::size_t l);
Arrangement refl_C(std::size_t l);
Arrangement refl_D(std::size_t l);
Arrangement A_lk(std::size_t l, std::size_t k);
/// A(2n,1), n >= 3.
Arrangement A_2n_1(std::size_t n);
/// A(4n+1,1), n >= 2.
Arrangement A_4n1_1(std::size_t n);
/// The 18-hyperplane 4-arrangement over Q(zeta_3).
Arrangement g314_sub();
/// Localization of g314_sub at H1 cap H2 cap H3, essentialized.
Arrangement g314_C();
/// Restriction of g314_sub to H8.
Arrangement g314_D();
/// Restriction of g314_sub to H2: ten lines with s = -4.
Arrangement g314_A2();
/// n lines in general position in rank min(l, n): normals (1, t, ..., t^(l-1)).
Arrangement generic(std::size_t l, std::size_t n);

/// Builds a catalog member from "name" or "name:p1:p2".
Arrangement by_name(const std::string &spec);
/// Names accepted by by_name, with parameter hints.
std::vector<std::string> catalog_names();

}  // namespace gen

/// Text format: `dim l`, `field QQ|cyclo N`, then one normal per line.
Arrangement parse_arrangement(const std::string &text, std::vector<std::string> *warnings = nullptr);
Arrangement read_arrangement_file(const std::string &path, std::vector<std::string> *warnings = nullptr);
std::string write_arrangement(const Arrangement &a);

}  // namespace arrango
