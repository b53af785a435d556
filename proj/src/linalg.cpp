#include "arrango/linalg.hpp"

#include <bit>

namespace arrango {

Covector Echelon::reduce(Covector v) const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Scalar &c = v[pivots[r]];
    if (c.is_zero()) continue;
    Scalar f = c;
    for (std::size_t j = 0; j < cols; ++j)
      if (!rows[r][j].is_zero()) v[j] -= f * rows[r][j];
  }
  return v;
}

bool Echelon::contains(const Covector &v) const { return is_zero(reduce(v)); }

bool Echelon::insert(Covector v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < cols && v[p].is_zero()) ++p;
  if (p == cols) return false;
  Scalar inv = v[p].inverse();
  for (std::size_t j = p; j < cols; ++j)
    if (!v[j].is_zero()) v[j] *= inv;
  for (auto &row : rows) {
    if (row[p].is_zero()) continue;
    Scalar f = row[p];
    for (std::size_t j = p; j < cols; ++j)
      if (!v[j].is_zero()) row[j] -= f * v[j];
  }
  std::size_t at = 0;
  while (at < pivots.size() && pivots[at] < p) ++at;
  rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
  pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(at), p);
  return true;
}

Echelon rref(const Matrix &rows, std::size_t cols) {
  Echelon e;
  e.cols = cols;
  for (const auto &r : rows) e.insert(r);
  return e;
}

std::size_t rank_of(const Matrix &rows, std::size_t cols) { return rref(rows, cols).rank(); }

Matrix kernel(const Echelon &e) {
  std::vector<bool> is_pivot(e.cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t f = 0; f < e.cols; ++f) {
    if (is_pivot[f]) continue;
    Covector v(e.cols, Scalar(0));
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return rref(basis, e.cols).rows;
}

Matrix canonical_span(const Matrix &rows, std::size_t cols) { return rref(rows, cols).rows; }

Scalar dot(const Covector &a, const Covector &b) {
  Scalar s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Covector add_scaled(const Covector &a, const Scalar &f, const Covector &b) {
  Covector r = a;
  if (f.is_zero()) return r;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] += f * b[i];
  return r;
}

Covector scaled(const Covector &a, const Scalar &f) {
  Covector r = a;
  for (auto &x : r) x *= f;
  return r;
}

bool is_zero(const Covector &v) {
  for (const auto &x : v)
    if (!x.is_zero()) return false;
  return true;
}

Scalar normalize_projective(Covector &v) {
  for (const auto &x : v) {
    if (x.is_zero()) continue;
    Scalar c = x;
    Scalar inv = c.inverse();
    for (auto &y : v) y *= inv;
    return c;
  }
  return Scalar(0);
}

int normalize_signed(Covector &v) {
  for (const auto &x : v) {
    if (x.is_zero()) continue;
    int s = x.sign();
    Scalar inv = (s > 0 ? x : -x).inverse();
    for (auto &y : v) y *= inv;
    return s;
  }
  return 0;
}

bool proportional(const Covector &a, const Covector &b) {
  Covector x = a, y = b;
  normalize_projective(x);
  normalize_projective(y);
  return x == y;
}

Scalar determinant(Matrix m) {
  std::size_t n = m.size();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Scalar inv = m[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      Scalar f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m[c][j].is_zero()) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::optional<Matrix> inverse(Matrix m) {
  std::size_t n = m.size();
  Matrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Scalar f = m[c][c].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= f;
      inv[c][j] *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      Scalar g = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        if (!m[c][j].is_zero()) m[i][j] -= g * m[c][j];
        if (!inv[c][j].is_zero()) inv[i][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

std::optional<Covector> coordinates(const Matrix &basis_rows, const Covector &v) {
  // Solve sum_i x_i basis_rows[i] = v by elimination on the transposed system.
  std::size_t k = basis_rows.size();
  std::size_t n = v.size();
  Matrix a(n, Covector(k + 1, Scalar(0)));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) a[j][i] = basis_rows[i][j];
    a[j][k] = v[j];
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivot_of_row;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;  // basis rows dependent
    std::swap(a[p], a[r]);
    Scalar f = a[r][c].inverse();
    for (std::size_t j = c; j <= k; ++j) a[r][j] *= f;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar g = a[i][c];
      for (std::size_t j = c; j <= k; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= g * a[r][j];
    }
    pivot_of_row.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (!a[i][k].is_zero()) return std::nullopt;
  Covector x(k, Scalar(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_of_row[i]] = a[i][k];
  return x;
}

Matrix multiply(const Matrix &a, const Matrix &b) {
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
  Matrix c(n, Covector(m, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < inner; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[t][j].is_zero()) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

Matrix identity(std::size_t n) {
  Matrix m(n, Covector(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

IndexSet IndexSet::of(std::size_t universe, const std::vector<std::size_t> &items) {
  IndexSet s(universe);
  for (auto i : items) s.insert(i);
  return s;
}

std::size_t IndexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool IndexSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool IndexSet::subset_of(const IndexSet &o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

IndexSet IndexSet::operator&(const IndexSet &o) const {
  IndexSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

IndexSet IndexSet::operator|(const IndexSet &o) const {
  IndexSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
  return r;
}

IndexSet IndexSet::operator-(const IndexSet &o) const {
  IndexSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
  return r;
}

std::vector<std::size_t> IndexSet::items() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t IndexSet::hash() const {
  std::size_t h = n_;
  for (auto w : words_) h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace arrango
