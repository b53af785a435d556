#include "arrango/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace arrango {

long long CharPoly::operator()(long long t) const {
  long long v = 0;
  for (std::size_t k = coefficients.size(); k-- > 0;) v = v * t + coefficients[k];
  return v;
}

std::optional<std::vector<long long>> CharPoly::integer_roots() const {
  std::vector<long long> p = coefficients;
  std::vector<long long> roots;
  while (p.size() > 1 && p[0] == 0) {
    roots.push_back(0);
    p.erase(p.begin());
  }
  auto divide_out = [&p](long long r) {
    // synthetic division by (t - r); false if r is not a root
    const std::size_t d = p.size() - 1;
    std::vector<long long> q(d);
    q[d - 1] = p[d];
    for (std::size_t k = d - 1; k > 0; --k) q[k - 1] = p[k] + r * q[k];
    if (p[0] + r * q[0] != 0) return false;
    p = std::move(q);
    return true;
  };
  while (p.size() > 1) {
    long long c0 = std::llabs(p[0]);
    bool found = false;
    for (long long d = 1; d * d <= c0 && !found; ++d) {
      if (c0 % d) continue;
      for (long long r : {d, -d, c0 / d, -(c0 / d)})
        if (divide_out(r)) {
          roots.push_back(r);
          found = true;
          break;
        }
    }
    if (!found) return std::nullopt;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string CharPoly::to_string() const {
  std::string out;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    long long c = coefficients[k];
    if (c == 0) continue;
    std::string mag = std::to_string(std::llabs(c));
    std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    std::string piece = (std::llabs(c) == 1 && k > 0) ? mono : mag + mono;
    if (out.empty())
      out = (c < 0 ? "-" : "") + piece;
    else
      out += (c < 0 ? " - " : " + ") + piece;
  }
  return out.empty() ? "0" : out;
}

CharPoly multiply(const CharPoly &a, const CharPoly &b) {
  CharPoly c;
  c.coefficients.assign(a.coefficients.size() + b.coefficients.size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients.size(); ++j)
      c.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
  return c;
}

CharPoly poly_from_roots(const std::vector<long long> &roots, std::size_t extra) {
  CharPoly p;
  p.coefficients.assign(extra + 1, 0);
  p.coefficients[extra] = 1;
  for (long long r : roots) p = multiply(p, CharPoly{{-r, 1}, {}});
  return p;
}

IntersectionLattice::IntersectionLattice(Arrangement a) : arr_(std::move(a)) {
  const std::size_t n = arr_.size();
  const std::size_t l = arr_.dim();
  Flat v;
  v.rank = 0;
  v.basis = identity(l);
  v.hyperplanes = IndexSet(n);
  Echelon empty;
  empty.cols = l;
  flats_.push_back(v);
  spans_.push_back(empty);
  index_[v.hyperplanes] = 0;
  levels_.push_back({0});
  up_.emplace_back();
  atoms_.assign(n, 0);

  for (std::size_t q = 0;; ++q) {
    std::vector<std::size_t> next;
    for (std::size_t x : levels_[q]) {
      IndexSet covered = flats_[x].hyperplanes;
      for (std::size_t i = 0; i < n; ++i) {
        if (covered.contains(i)) continue;
        Echelon e = spans_[x];
        e.insert(arr_.normal(i));
        IndexSet s = flats_[x].hyperplanes;
        s.insert(i);
        for (std::size_t j = i + 1; j < n; ++j)
          if (!s.contains(j) && e.contains(arr_.normal(j))) s.insert(j);
        covered = covered | s;
        std::size_t id;
        if (auto it = index_.find(s); it != index_.end()) {
          id = it->second;
        } else {
          id = flats_.size();
          Flat f;
          f.rank = q + 1;
          f.basis = kernel(e);
          f.hyperplanes = s;
          flats_.push_back(std::move(f));
          spans_.push_back(std::move(e));
          index_.emplace(s, id);
          up_.emplace_back();
          next.push_back(id);
        }
        up_[x].push_back(id);
        if (q == 0) atoms_[i] = id;
      }
    }
    if (next.empty()) break;
    // deterministic order inside a level: by sorted index set
    std::vector<std::size_t> order = next;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return flats_[a].hyperplanes.items() < flats_[b].hyperplanes.items();
    });
    if (order != next) {
      // renumber the new level in sorted order
      std::vector<std::size_t> remap(flats_.size());
      std::iota(remap.begin(), remap.end(), 0);
      std::size_t base = next.front();
      for (std::size_t k = 0; k < order.size(); ++k) remap[order[k]] = base + k;
      std::vector<Flat> nf(order.size());
      std::vector<Echelon> ns(order.size());
      std::vector<std::vector<std::size_t>> nu(order.size());
      for (std::size_t k = 0; k < order.size(); ++k) {
        nf[k] = std::move(flats_[order[k]]);
        ns[k] = std::move(spans_[order[k]]);
        nu[k] = std::move(up_[order[k]]);
      }
      for (std::size_t k = 0; k < order.size(); ++k) {
        flats_[base + k] = std::move(nf[k]);
        spans_[base + k] = std::move(ns[k]);
        up_[base + k] = std::move(nu[k]);
        index_[flats_[base + k].hyperplanes] = base + k;
      }
      for (auto &ups : up_)
        for (auto &u : ups) u = remap[u];
      for (auto &a_id : atoms_) a_id = remap[a_id];
      for (std::size_t k = 0; k < order.size(); ++k) next[k] = base + k;
    }
    levels_.push_back(next);
  }
  for (auto &ups : up_) std::sort(ups.begin(), ups.end());
  // joins of two atoms are looked up constantly by the chamber code
  atom_join_.assign(n * n, 0);
  if (levels_.size() > 2)
    for (auto x : levels_[2]) {
      auto items = flats_[x].hyperplanes.items();
      for (auto i : items)
        for (auto j : items) atom_join_[i * n + j] = x;
    }

  mobius_.assign(flats_.size(), 0);
  mobius_[0] = 1;
  for (std::size_t y = 1; y < flats_.size(); ++y) {
    long long s = 0;
    for (std::size_t z = 0; z < y && flats_[z].rank < flats_[y].rank; ++z)
      if (flats_[z].hyperplanes.subset_of(flats_[y].hyperplanes)) s += mobius_[z];
    mobius_[y] = -s;
  }
}

std::optional<std::size_t> IntersectionLattice::find(const IndexSet &s) const {
  if (auto it = index_.find(s); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t IntersectionLattice::closure(const IndexSet &s) const {
  Echelon e;
  e.cols = arr_.dim();
  for (auto i : s.items()) e.insert(arr_.normal(i));
  IndexSet c(arr_.size());
  for (std::size_t i = 0; i < arr_.size(); ++i)
    if (s.contains(i) || e.contains(arr_.normal(i))) c.insert(i);
  return index_.at(c);
}

std::size_t IntersectionLattice::join(std::size_t x, std::size_t y) const {
  if (leq(x, y)) return y;
  if (leq(y, x)) return x;
  if (flats_[x].rank == 1 && flats_[y].rank == 1) {
    std::size_t n = arr_.size();
    return atom_join_[set(x).items().front() * n + set(y).items().front()];
  }
  return closure(set(x) | set(y));
}

std::size_t IntersectionLattice::meet(std::size_t x, std::size_t y) const { return index_.at(set(x) & set(y)); }

std::size_t IntersectionLattice::join_rank(std::size_t x, std::size_t y) const {
  if (leq(x, y)) return rank_of(y);
  if (leq(y, x)) return rank_of(x);
  Echelon e = spans_[x];
  for (const auto &r : spans_[y].rows) {
    e.insert(r);
    if (e.rank() == arr_.dim()) break;
  }
  return e.rank();
}

std::vector<long long> IntersectionLattice::mobius_from(std::size_t x) const {
  std::vector<long long> mu(flats_.size(), 0);
  mu[x] = 1;
  std::vector<std::size_t> above;
  for (std::size_t y = x + 1; y < flats_.size(); ++y)
    if (flats_[y].rank > flats_[x].rank && leq(x, y)) above.push_back(y);
  std::vector<std::size_t> seen = {x};
  for (std::size_t y : above) {
    long long s = 0;
    for (std::size_t z : seen)
      if (flats_[z].rank < flats_[y].rank && leq(z, y)) s += mu[z];
    mu[y] = -s;
    seen.push_back(y);
  }
  return mu;
}

CharPoly IntersectionLattice::char_poly() const {
  CharPoly p;
  const std::size_t l = arr_.dim();
  p.coefficients.assign(l + 1, 0);
  p.mu_by_rank.assign(rank() + 1, 0);
  for (std::size_t x = 0; x < flats_.size(); ++x) {
    p.coefficients[l - flats_[x].rank] += mobius_[x];
    p.mu_by_rank[flats_[x].rank] += mobius_[x];
  }
  return p;
}

CharPoly IntersectionLattice::char_poly_restriction(std::size_t x) const {
  CharPoly p;
  const std::size_t l = arr_.dim();
  const std::size_t d = l - flats_[x].rank;
  p.coefficients.assign(d + 1, 0);
  p.mu_by_rank.assign(rank() - flats_[x].rank + 1, 0);
  auto mu = mobius_from(x);
  for (std::size_t z = 0; z < flats_.size(); ++z) {
    if (mu[z] == 0) continue;
    p.coefficients[l - flats_[z].rank] += mu[z];
    p.mu_by_rank[flats_[z].rank - flats_[x].rank] += mu[z];
  }
  return p;
}

CharPoly IntersectionLattice::char_poly_localization(std::size_t x) const {
  CharPoly p;
  const std::size_t l = arr_.dim();
  p.coefficients.assign(l + 1, 0);
  p.mu_by_rank.assign(flats_[x].rank + 1, 0);
  for (std::size_t z = 0; z < flats_.size(); ++z) {
    if (!leq(z, x)) continue;
    p.coefficients[l - flats_[z].rank] += mobius_[z];
    p.mu_by_rank[flats_[z].rank] += mobius_[z];
  }
  return p;
}

CharPoly char_poly(const Arrangement &a) { return IntersectionLattice(a).char_poly(); }

long long s_value(const IntersectionLattice &l) {
  const auto ell = static_cast<long long>(l.arrangement().dim());
  long long s = ell * std::llabs(l.char_poly()(-1));
  for (std::size_t h = 0; h < l.arrangement().size(); ++h)
    s -= 2 * std::llabs(l.char_poly_restriction(l.atom(h))(-1));
  return s;
}

long long s_value(const Arrangement &a) { return s_value(IntersectionLattice(a)); }

bool is_simplicial_rank3(const IntersectionLattice &l) {
  if (l.arrangement().dim() != 3 || l.rank() != 3)
    throw LatticeError("the rank-3 criterion needs an essential arrangement of rank 3");
  long long mu2 = l.char_poly().mu_by_rank[2];
  return mu2 == 2 * static_cast<long long>(l.level(2).size()) - 3;
}

std::map<std::size_t, std::size_t> rank2_multiset(const IntersectionLattice &l) {
  std::map<std::size_t, std::size_t> m;
  if (l.rank() < 2) return m;
  for (auto x : l.level(2)) ++m[l.set(x).count()];
  return m;
}

bool is_modular_below(const IntersectionLattice &l, std::size_t x, std::size_t within) {
  const std::size_t rx = l.rank_of(x);
  for (std::size_t y = 0; y < l.size(); ++y) {
    if (!l.leq(y, within)) continue;
    if (l.leq(x, y) || l.leq(y, x)) continue;
    std::size_t rm = l.rank_of(l.meet(x, y));
    if (rm + l.join_rank(x, y) != rx + l.rank_of(y)) return false;
  }
  return true;
}

bool is_modular(const IntersectionLattice &l, std::size_t x) { return is_modular_below(l, x, l.top()); }

bool is_modular_by_sum(const IntersectionLattice &l, std::size_t x) {
  for (std::size_t y = 0; y < l.size(); ++y) {
    Matrix s = flat_sum(l.flat(x), l.flat(y));
    if (!flat_of_subspace(l.arrangement(), s)) return false;
  }
  return true;
}

std::vector<std::size_t> modular_flats(const IntersectionLattice &l) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (is_modular(l, x)) out.push_back(x);
  return out;
}

std::optional<SupersolvableCertificate> supersolvable_certificate(const IntersectionLattice &l) {
  // best[x]: a chain of modular elements from V to x, when [V, x] is supersolvable
  std::vector<int> state(l.size(), 0);  // 0 unknown, 1 yes, -1 no
  std::vector<std::size_t> below(l.size(), 0);
  state[0] = 1;
  std::function<bool(std::size_t)> solve = [&](std::size_t x) -> bool {
    if (state[x] != 0) return state[x] > 0;
    const std::size_t r = l.rank_of(x);
    for (std::size_t y : l.level(r - 1)) {
      if (!l.leq(y, x)) continue;
      if (!is_modular_below(l, y, x)) continue;
      if (solve(y)) {
        below[x] = y;
        state[x] = 1;
        return true;
      }
    }
    state[x] = -1;
    return false;
  };
  if (!solve(l.top())) return std::nullopt;
  SupersolvableCertificate cert;
  for (std::size_t x = l.top();; x = below[x]) {
    cert.chain.push_back(x);
    if (x == 0) break;
  }
  std::reverse(cert.chain.begin(), cert.chain.end());
  for (std::size_t i = 1; i < cert.chain.size(); ++i)
    cert.exponents.push_back(static_cast<long long>(l.set(cert.chain[i]).count()) -
                             static_cast<long long>(l.set(cert.chain[i - 1]).count()));
  return cert;
}

std::optional<SupersolvableCertificate> is_supersolvable(const Arrangement &a) {
  return supersolvable_certificate(IntersectionLattice(a));
}

Decomposition decompose(const Arrangement &a) {
  const std::size_t n = a.size();
  // fundamental circuits with respect to a greedy basis determine the
  // connected components of the matroid of the normals
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = root(parent[i]);
  };
  std::vector<std::size_t> basis;
  Matrix rows;
  for (std::size_t i = 0; i < n; ++i) {
    auto c = coordinates(rows, a.normal(i));
    if (!c) {
      basis.push_back(i);
      rows.push_back(a.normal(i));
      continue;
    }
    for (std::size_t k = 0; k < c->size(); ++k)
      if (!(*c)[k].is_zero()) parent[root(basis[k])] = root(i);
  }
  std::map<std::size_t, IndexSet> groups;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = groups.try_emplace(root(i), IndexSet(n));
    it->second.insert(i);
  }
  Decomposition d;
  for (auto &[r, s] : groups) d.blocks.push_back(s);
  std::sort(d.blocks.begin(), d.blocks.end(),
            [](const IndexSet &x, const IndexSet &y) { return x.items().front() < y.items().front(); });
  d.irreducible = d.blocks.size() == 1;
  return d;
}

bool is_irreducible(const Arrangement &a) { return decompose(a).irreducible; }

namespace {

struct IsoSearch {
  const IntersectionLattice &l1;
  const IntersectionLattice &l2;
  std::size_t n;
  std::vector<std::vector<std::size_t>> pj1, pj2;  // rank-2 join of atom pairs
  std::vector<std::vector<std::size_t>> candidates;
  std::vector<std::size_t> order;
  std::vector<std::size_t> image;
  std::vector<bool> used;

  static std::vector<std::vector<std::size_t>> pair_joins(const IntersectionLattice &l) {
    std::size_t n = l.arrangement().size();
    std::vector<std::vector<std::size_t>> pj(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) pj[a][b] = pj[b][a] = l.join(l.atom(a), l.atom(b));
    return pj;
  }

  static std::vector<std::pair<std::size_t, std::size_t>> fingerprint(const IntersectionLattice &l, std::size_t h) {
    std::vector<std::pair<std::size_t, std::size_t>> f;
    for (std::size_t x = 0; x < l.size(); ++x)
      if (l.set(x).contains(h)) f.emplace_back(l.rank_of(x), l.set(x).count());
    std::sort(f.begin(), f.end());
    return f;
  }

  bool consistent(std::size_t depth) {
    std::size_t a = order[depth];
    std::size_t fa = image[a];
    for (std::size_t k = 0; k < depth; ++k) {
      std::size_t b = order[k];
      std::size_t x1 = pj1[a][b], x2 = pj2[fa][image[b]];
      if (l1.set(x1).count() != l2.set(x2).count()) return false;
      for (std::size_t t = 0; t < depth; ++t) {
        std::size_t c = order[t];
        if (l1.set(x1).contains(c) != l2.set(x2).contains(image[c])) return false;
      }
    }
    return true;
  }

  bool verify() const {
    for (std::size_t x = 0; x < l1.size(); ++x) {
      IndexSet s(n);
      for (auto i : l1.set(x).items()) s.insert(image[i]);
      auto y = l2.find(s);
      if (!y || l2.rank_of(*y) != l1.rank_of(x)) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == n) return verify();
    std::size_t a = order[depth];
    for (std::size_t c : candidates[a]) {
      if (used[c]) continue;
      image[a] = c;
      used[c] = true;
      if (consistent(depth) && search(depth + 1)) return true;
      used[c] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> lattice_isomorphism(const IntersectionLattice &l1,
                                                            const IntersectionLattice &l2) {
  const std::size_t n = l1.arrangement().size();
  if (n != l2.arrangement().size() || l1.rank() != l2.rank()) return std::nullopt;
  for (std::size_t q = 0; q <= l1.rank(); ++q)
    if (l1.level(q).size() != l2.level(q).size()) return std::nullopt;
  IsoSearch s{l1, l2, n, IsoSearch::pair_joins(l1), IsoSearch::pair_joins(l2), {}, {}, {}, {}};
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> f1(n), f2(n);
  for (std::size_t h = 0; h < n; ++h) {
    f1[h] = IsoSearch::fingerprint(l1, h);
    f2[h] = IsoSearch::fingerprint(l2, h);
  }
  s.candidates.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (f1[a] == f2[b]) s.candidates[a].push_back(b);
    if (s.candidates[a].empty()) return std::nullopt;
  }
  // most constrained atoms first, then grow along shared rank-2 flats
  s.order.resize(n);
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(), [&](std::size_t a, std::size_t b) {
    return s.candidates[a].size() < s.candidates[b].size();
  });
  s.image.assign(n, 0);
  s.used.assign(n, false);
  if (!s.search(0)) return std::nullopt;
  return s.image;
}

HansenMotzkinWitness hansen_motzkin_witness(const IntersectionLattice &l) {
  const Arrangement &a = l.arrangement();
  const std::size_t ell = a.dim();
  if (ell < 3 || !a.is_real() || l.rank() != ell)
    throw LatticeError("the Hansen-Motzkin search needs an essential real arrangement of rank >= 3");
  for (std::size_t x : l.level(ell - 1))
    for (std::size_t y : l.level(ell - 2)) {
      if (!l.leq(y, x)) continue;
      IndexSet extra = l.set(x) - l.set(y);
      if (extra.count() == 1) return {x, y, extra.items().front()};
    }
  throw LatticeError("no Hansen-Motzkin witness found");
}

IntersectionLattice interval(const IntersectionLattice &l, std::size_t x, std::size_t y) {
  if (!l.leq(x, y)) throw LatticeError("interval needs X <= Y");
  const Arrangement &a = l.arrangement();
  const auto ys = l.set(y).items();
  Arrangement loc = subarrangement(a, l.set(y));
  std::vector<std::size_t> gens;
  for (std::size_t k = 0; k < ys.size(); ++k)
    if (l.set(x).contains(ys[k])) gens.push_back(k);
  Flat fx = make_flat(loc, gens);
  return IntersectionLattice(restriction(loc, fx));
}

}  // namespace arrango
