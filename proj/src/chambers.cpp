#include "arrango/chambers.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace arrango {

SignVector sign_vector(const Arrangement &a, const Covector &point) {
  SignVector s(a.size(), '0');
  for (std::size_t i = 0; i < a.size(); ++i) {
    int v = dot(a.normal(i), point).sign();
    s[i] = v > 0 ? '+' : (v < 0 ? '-' : '0');
  }
  return s;
}

namespace {

// Point sum t^m b_m of the flat off every hyperplane not containing it.
Covector generic_point(const Arrangement &a, const Flat &x) {
  const std::size_t d = x.basis.size();
  std::vector<std::size_t> others;
  for (std::size_t h = 0; h < a.size(); ++h)
    if (!x.hyperplanes.contains(h)) others.push_back(h);
  std::vector<std::vector<Scalar>> coeff(others.size(), std::vector<Scalar>(d));
  for (std::size_t k = 0; k < others.size(); ++k)
    for (std::size_t m = 0; m < d; ++m) coeff[k][m] = dot(a.normal(others[k]), x.basis[m]);
  for (long t = 1;; ++t) {
    bool ok = true;
    for (std::size_t k = 0; k < others.size() && ok; ++k) {
      Scalar v(0);
      for (std::size_t m = d; m-- > 0;) v = v * Scalar(t) + coeff[k][m];
      ok = !v.is_zero();
    }
    if (!ok) continue;
    Covector p(a.dim(), Scalar(0));
    Scalar power(1);
    for (std::size_t m = 0; m < d; ++m) {
      p = add_scaled(p, power, x.basis[m]);
      power *= Scalar(t);
    }
    return p;
  }
}

char flip(char c) { return c == '+' ? '-' : (c == '-' ? '+' : '0'); }

}  // namespace

ChamberComplex::ChamberComplex(Arrangement a) : lattice_(std::move(a)) {
  const Arrangement &arr = arrangement();
  if (!arr.is_real()) throw ChamberError("chambers need a real arrangement");
  if (!arr.is_essential()) throw ChamberError("chambers need an essential arrangement");
  const std::size_t n = arr.size();
  const IntersectionLattice &L = lattice_;
  faces_.assign(L.size(), {});
  face_index_.assign(L.size(), {});
  generic_points_.assign(L.size(), {});

  for (std::size_t x = L.size(); x-- > 0;) {
    const Flat &fx = L.flat(x);
    auto add = [&](const SignVector &s) -> std::pair<std::size_t, bool> {
      auto [it, inserted] = face_index_[x].try_emplace(s, faces_[x].size());
      if (inserted) faces_[x].push_back(s);
      return {it->second, inserted};
    };
    if (fx.dim() == 0) {
      generic_points_[x] = Covector(arr.dim(), Scalar(0));
      add(SignVector(n, '0'));
      continue;
    }
    generic_points_[x] = generic_point(arr, fx);
    SignVector start = sign_vector(arr, generic_points_[x]);
    struct Cls {
      std::size_t flat;
      std::vector<std::size_t> members;
    };
    std::vector<Cls> classes;
    for (std::size_t z : L.covers(x)) classes.push_back({z, (L.set(z) - L.set(x)).items()});
    std::deque<std::size_t> queue;
    add(start);
    queue.push_back(0);
    while (!queue.empty()) {
      std::size_t f = queue.front();
      queue.pop_front();
      SignVector s = faces_[x][f];
      for (const auto &c : classes) {
        SignVector on = s;
        for (auto h : c.members) on[h] = '0';
        if (!face_index_[c.flat].count(on)) continue;
        SignVector across = s;
        for (auto h : c.members) across[h] = flip(across[h]);
        auto [id, fresh] = add(across);
        if (fresh) queue.push_back(id);
        if (x == 0) {
          // atoms: every class is a single hyperplane
          if (chambers_.size() <= f) chambers_.resize(f + 1);
          chambers_[f].walls.push_back(c.members.front());
          chambers_[f].neighbors.push_back(id);
        }
      }
    }
  }
  chambers_.resize(faces_[0].size());
  for (std::size_t k = 0; k < chambers_.size(); ++k) {
    chambers_[k].signs = faces_[0][k];
    std::vector<std::pair<std::size_t, std::size_t>> w;
    for (std::size_t i = 0; i < chambers_[k].walls.size(); ++i)
      w.emplace_back(chambers_[k].walls[i], chambers_[k].neighbors[i]);
    std::sort(w.begin(), w.end());
    for (std::size_t i = 0; i < w.size(); ++i) {
      chambers_[k].walls[i] = w[i].first;
      chambers_[k].neighbors[i] = w[i].second;
    }
  }
  long long expected = std::llabs(L.char_poly()(-1));
  if (static_cast<long long>(chambers_.size()) != expected)
    throw ChamberError("internal error: found " + std::to_string(chambers_.size()) + " chambers but |chi(-1)| = " +
                       std::to_string(expected));
}

ChamberComplex ChamberComplex::of(const Arrangement &a, std::vector<std::string> *notes) {
  if (a.is_essential()) return ChamberComplex(a);
  if (notes)
    notes->push_back("arrangement of rank " + std::to_string(a.rank()) + " in dimension " + std::to_string(a.dim()) +
                     " was essentialized");
  return ChamberComplex(essentialize(a));
}

std::optional<std::size_t> ChamberComplex::find(const SignVector &s) const {
  if (auto it = face_index_[0].find(s); it != face_index_[0].end()) return it->second;
  return std::nullopt;
}

std::size_t ChamberComplex::neighbor(std::size_t k, std::size_t h) const {
  const Chamber &c = chambers_.at(k);
  for (std::size_t i = 0; i < c.walls.size(); ++i)
    if (c.walls[i] == h) return c.neighbors[i];
  throw ChamberError("hyperplane " + std::to_string(h) + " is not a wall of chamber " + std::to_string(k));
}

std::size_t ChamberComplex::face_count() const {
  std::size_t total = 0;
  for (const auto &f : faces_) total += f.size();
  return total;
}

Covector ChamberComplex::interior_point(std::size_t k) const {
  const Arrangement &arr = arrangement();
  const SignVector &s = chambers_.at(k).signs;
  const std::size_t q = arr.dim() - 1;
  Covector sum(arr.dim(), Scalar(0));
  for (std::size_t x : lattice_.level(q)) {
    const Covector &p = generic_points_[x];
    for (const auto &f : faces_[x]) {
      bool conformal = true;
      for (std::size_t i = 0; i < s.size() && conformal; ++i) conformal = f[i] == '0' || f[i] == s[i];
      if (!conformal) continue;
      // orient the line's point to match the ray
      std::size_t i = f.find_first_not_of('0');
      bool same = dot(arr.normal(i), p).sign() == (f[i] == '+' ? 1 : -1);
      sum = add_scaled(sum, Scalar(same ? 1 : -1), p);
    }
  }
  return sum;
}

bool ChamberComplex::is_simplicial(std::size_t k) const {
  const Chamber &c = chambers_.at(k);
  if (c.walls.size() != arrangement().dim()) return false;
  Matrix rows;
  for (auto h : c.walls) rows.push_back(arrangement().normal(h));
  return rank_of(rows, arrangement().dim()) == arrangement().dim();
}

std::vector<Covector> ChamberComplex::chamber_basis(std::size_t k) const {
  if (!is_simplicial(k)) throw ChamberError("chamber " + std::to_string(k) + " is not simplicial");
  const Chamber &c = chambers_[k];
  std::vector<Covector> b;
  for (auto h : c.walls) b.push_back(scaled(arrangement().normal(h), Scalar(c.signs[h] == '+' ? 1 : -1)));
  return b;
}

bool is_simplicial_geometric(const ChamberComplex &cc) {
  for (std::size_t k = 0; k < cc.size(); ++k)
    if (!cc.is_simplicial(k)) return false;
  return true;
}

Frame canonical_frame(const ChamberComplex &cc, std::size_t k) {
  Frame f;
  f.chamber = k;
  f.roots = cc.chamber_basis(k);
  f.hyperplanes = cc.chamber(k).walls;
  return f;
}

Frame make_frame(const ChamberComplex &cc, std::size_t k, std::vector<Covector> roots) {
  const Chamber &c = cc.chamber(k);
  if (roots.size() != c.walls.size()) throw ChamberError("basis size does not match the number of walls");
  Frame f;
  f.chamber = k;
  IndexSet seen(cc.arrangement().size());
  for (const auto &r : roots) {
    auto h = cc.arrangement().find(r);
    if (!h) throw ChamberError("basis vector is not a normal of the arrangement");
    if (seen.contains(*h)) throw ChamberError("basis repeats a hyperplane");
    seen.insert(*h);
    if (!std::binary_search(c.walls.begin(), c.walls.end(), *h))
      throw ChamberError("basis vector is not a wall of chamber " + std::to_string(k));
    // r = lambda * normal with lambda of the chamber's sign
    std::size_t i = 0;
    while (r[i].is_zero()) ++i;
    int lambda = r[i].sign();
    if ((lambda > 0) != (c.signs[*h] == '+')) throw ChamberError("basis vector is not inward");
    f.hyperplanes.push_back(*h);
  }
  f.roots = std::move(roots);
  return f;
}

Matrix c_coefficients(const ChamberComplex &cc, const Frame &f) {
  const IntersectionLattice &L = cc.lattice();
  const std::size_t l = f.roots.size();
  Matrix c(l, Covector(l, Scalar(0)));
  for (std::size_t i = 0; i < l; ++i) {
    c[i][i] = Scalar(2);
    for (std::size_t j = 0; j < l; ++j) {
      if (i == j) continue;
      std::size_t x = L.join(L.atom(f.hyperplanes[i]), L.atom(f.hyperplanes[j]));
      // every normal of A_X is a*alpha_i + b*alpha_j; solve on a nonzero 2x2 minor
      const Covector &ai = f.roots[i], &aj = f.roots[j];
      std::size_t p = 0, r = 0;
      Scalar det(0);
      for (std::size_t u = 0; u < ai.size() && det.is_zero(); ++u)
        for (std::size_t v = u + 1; v < ai.size() && det.is_zero(); ++v) {
          det = ai[u] * aj[v] - ai[v] * aj[u];
          p = u;
          r = v;
        }
      std::optional<Scalar> best;
      for (auto g : L.set(x).items()) {
        const Covector &n = cc.arrangement().normal(g);
        Scalar b = ai[p] * n[r] - ai[r] * n[p];
        if (b.is_zero()) continue;
        Scalar a = n[p] * aj[r] - n[r] * aj[p];
        // a/b with the common factor 1/det cancelled
        Scalar ratio = a / b;
        if (ratio.sign() < 0) continue;
        if (!best || compare(ratio, *best) > 0) best = ratio;
      }
      c[i][j] = best ? -*best : Scalar(0);
    }
  }
  return c;
}

std::vector<Covector> adjacent_basis(const ChamberComplex &cc, const Frame &f, std::size_t i, const Scalar &cii) {
  if (compare(cii, Scalar(1)) <= 0) throw ChamberError("the diagonal coefficient must exceed 1");
  Matrix c = c_coefficients(cc, f);
  std::vector<Covector> b;
  for (std::size_t j = 0; j < f.roots.size(); ++j)
    b.push_back(add_scaled(f.roots[j], -(j == i ? cii : c[i][j]), f.roots[i]));
  return b;
}

Matrix reflection_matrix(const Matrix &c, std::size_t i) {
  Matrix s = identity(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) s[i][j] = j == i ? Scalar(-1) : -c[i][j];
  return s;
}

Frame sigma(const ChamberComplex &cc, const Frame &f, std::size_t i, const Matrix &c) {
  if (i >= f.roots.size()) throw ChamberError("wall position out of range");
  std::vector<Covector> b;
  for (std::size_t j = 0; j < f.roots.size(); ++j) b.push_back(add_scaled(f.roots[j], -c[i][j], f.roots[i]));
  return make_frame(cc, cc.neighbor(f.chamber, f.hyperplanes[i]), std::move(b));
}

Frame sigma(const ChamberComplex &cc, const Frame &f, std::size_t i) { return sigma(cc, f, i, c_coefficients(cc, f)); }

Frame gallery_basis(const ChamberComplex &cc, const Frame &f, const std::vector<std::size_t> &crossings) {
  Frame cur = f;
  for (auto i : crossings) cur = sigma(cc, cur, i);
  return cur;
}

std::optional<Covector> nonnegative_coordinates(const std::vector<Covector> &basis, const Covector &v) {
  auto c = coordinates(basis, v);
  if (!c) return std::nullopt;
  for (const auto &x : *c)
    if (x.sign() < 0) return std::nullopt;
  return c;
}

}  // namespace arrango
