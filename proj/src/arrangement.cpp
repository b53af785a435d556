#include "arrango/arrangement.hpp"

#include <numeric>

namespace arrango {

std::string Field::tag() const { return order == 1 ? "QQ" : "cyclo " + std::to_string(order); }

Derived from_matrix_mapped(std::size_t dim, const std::vector<Covector> &columns, unsigned min_order) {
  unsigned order = min_order;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != dim)
      throw ArrangementError("column " + std::to_string(j + 1) + " has length " +
                             std::to_string(columns[j].size()) + ", expected " + std::to_string(dim));
    for (const auto &x : columns[j])
      if (!x.is_rational()) order = lcm_order(order, x.minimal().order());
  }
  Derived d;
  d.arrangement = Arrangement(dim);
  auto &normals = d.arrangement.normals_;
  bool real = true;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    Covector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = columns[j][i].embed(order);
    if (is_zero(v)) throw ArrangementError("zero normal (column " + std::to_string(j + 1) + ")");
    Scalar c = normalize_projective(v);
    std::optional<std::size_t> at;
    for (std::size_t k = 0; k < normals.size(); ++k)
      if (normals[k] == v) {
        at = k;
        break;
      }
    if (!at) {
      for (const auto &x : v)
        if (real && !x.is_real()) real = false;
      at = normals.size();
      normals.push_back(std::move(v));
    }
    d.image.push_back(at);
    d.factor.push_back(c);
  }
  d.arrangement.field_.order = order;
  d.arrangement.field_.real = real;
  return d;
}

Arrangement Arrangement::from_matrix(std::size_t dim, const std::vector<Covector> &columns,
                                     std::vector<std::string> *warnings, unsigned min_order) {
  Derived d = from_matrix_mapped(dim, columns, min_order);
  if (warnings) {
    std::vector<bool> seen(d.arrangement.size(), false);
    std::vector<std::size_t> first(d.arrangement.size(), 0);
    for (std::size_t j = 0; j < d.image.size(); ++j) {
      std::size_t t = *d.image[j];
      if (!seen[t]) {
        seen[t] = true;
        first[t] = j;
      } else {
        warnings->push_back("column " + std::to_string(j + 1) + " is proportional to column " +
                            std::to_string(first[t] + 1) + "; dropped");
      }
    }
  }
  return std::move(d.arrangement);
}

std::size_t Arrangement::rank() const { return rank_of(normals_, dim_); }

std::optional<std::size_t> Arrangement::find(const Covector &v) const {
  if (v.size() != dim_ || is_zero(v)) return std::nullopt;
  Covector w = v;
  normalize_projective(w);
  for (std::size_t i = 0; i < normals_.size(); ++i)
    if (normals_[i] == w) return i;
  return std::nullopt;
}

IndexSet hyperplanes_containing(const Arrangement &a, const Matrix &subspace) {
  IndexSet s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool all = true;
    for (const auto &b : subspace)
      if (!dot(a.normal(i), b).is_zero()) {
        all = false;
        break;
      }
    if (all) s.insert(i);
  }
  return s;
}

Flat make_flat(const Arrangement &a, const std::vector<std::size_t> &generators) {
  Echelon e;
  e.cols = a.dim();
  for (auto g : generators) {
    if (g >= a.size()) throw ArrangementError("hyperplane index out of range");
    e.insert(a.normal(g));
  }
  Flat f;
  f.rank = e.rank();
  f.basis = kernel(e);
  f.hyperplanes = IndexSet(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (e.contains(a.normal(i))) f.hyperplanes.insert(i);
  return f;
}

Matrix flat_sum(const Flat &x, const Flat &y) {
  Matrix rows = x.basis;
  rows.insert(rows.end(), y.basis.begin(), y.basis.end());
  std::size_t cols = !x.basis.empty() ? x.basis[0].size() : (!y.basis.empty() ? y.basis[0].size() : 0);
  return canonical_span(rows, cols);
}

std::optional<Flat> flat_of_subspace(const Arrangement &a, const Matrix &subspace) {
  IndexSet s = hyperplanes_containing(a, subspace);
  Flat f = make_flat(a, s.items());
  Matrix canon = canonical_span(subspace, a.dim());
  if (f.basis != canon) return std::nullopt;
  return f;
}

Arrangement product(const Arrangement &a1, const Arrangement &a2) {
  std::size_t l1 = a1.dim(), l2 = a2.dim();
  std::vector<Covector> cols;
  for (const auto &v : a1.normals()) {
    Covector w(l1 + l2, Scalar(0));
    for (std::size_t i = 0; i < l1; ++i) w[i] = v[i];
    cols.push_back(std::move(w));
  }
  for (const auto &v : a2.normals()) {
    Covector w(l1 + l2, Scalar(0));
    for (std::size_t i = 0; i < l2; ++i) w[l1 + i] = v[i];
    cols.push_back(std::move(w));
  }
  return Arrangement::from_matrix(l1 + l2, cols, nullptr, lcm_order(a1.field().order, a2.field().order));
}

Arrangement subarrangement(const Arrangement &a, const IndexSet &indices) {
  std::vector<Covector> cols;
  for (auto i : indices.items()) cols.push_back(a.normal(i));
  return Arrangement::from_matrix(a.dim(), cols, nullptr, a.field().order);
}

Arrangement localization(const Arrangement &a, const IndexSet &x) { return subarrangement(a, x); }

Arrangement localization(const Arrangement &a, const Flat &x) { return subarrangement(a, x.hyperplanes); }

Arrangement deletion(const Arrangement &a, std::size_t i) {
  IndexSet all(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    if (k != i) all.insert(k);
  return subarrangement(a, all);
}

namespace {

// Builds the derived arrangement from transformed columns where some
// columns vanish (absent entries).
Derived compose(std::size_t dim, const std::vector<std::optional<Covector>> &transformed, unsigned order) {
  std::vector<Covector> cols;
  std::vector<std::size_t> slot;
  for (std::size_t i = 0; i < transformed.size(); ++i)
    if (transformed[i]) {
      slot.push_back(i);
      cols.push_back(*transformed[i]);
    }
  Derived inner = from_matrix_mapped(dim, cols, order);
  Derived d;
  d.arrangement = std::move(inner.arrangement);
  d.image.assign(transformed.size(), std::nullopt);
  d.factor.assign(transformed.size(), Scalar(0));
  for (std::size_t j = 0; j < slot.size(); ++j) {
    d.image[slot[j]] = inner.image[j];
    d.factor[slot[j]] = inner.factor[j];
  }
  return d;
}

}  // namespace

Derived restriction_mapped(const Arrangement &a, const Flat &x) {
  std::vector<std::optional<Covector>> t(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Covector v(x.basis.size());
    for (std::size_t j = 0; j < x.basis.size(); ++j) v[j] = dot(a.normal(i), x.basis[j]);
    if (!is_zero(v)) t[i] = std::move(v);
  }
  return compose(x.basis.size(), t, a.field().order);
}

Arrangement restriction(const Arrangement &a, const Flat &x) { return restriction_mapped(a, x).arrangement; }

Derived essentialize_mapped(const Arrangement &a) {
  Echelon e = rref(a.normals(), a.dim());
  std::vector<std::optional<Covector>> t(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Covector v(e.rank());
    for (std::size_t r = 0; r < e.rank(); ++r) v[r] = a.normal(i)[e.pivots[r]];
    t[i] = std::move(v);
  }
  return compose(e.rank(), t, a.field().order);
}

Arrangement essentialize(const Arrangement &a) { return essentialize_mapped(a).arrangement; }

Derived quotient_mapped(const Arrangement &a, const Flat &x) {
  Echelon e;
  e.cols = a.dim();
  for (auto i : x.hyperplanes.items()) e.insert(a.normal(i));
  std::vector<std::optional<Covector>> t(a.size());
  for (auto i : x.hyperplanes.items()) {
    Covector v(e.rank());
    for (std::size_t r = 0; r < e.rank(); ++r) v[r] = a.normal(i)[e.pivots[r]];
    t[i] = std::move(v);
  }
  return compose(e.rank(), t, a.field().order);
}

}  // namespace arrango
