#include "arrango/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace arrango {

std::size_t CoxeterGraph::label(std::size_t i, std::size_t j) const {
  auto it = edges.find(std::minmax(i, j));
  return it == edges.end() ? 2 : it->second;
}

void CoxeterGraph::set_label(std::size_t i, std::size_t j, std::size_t m) {
  if (i == j) throw CoxeterError("loops are not allowed");
  if (m > 2)
    edges[std::minmax(i, j)] = m;
  else
    edges.erase(std::minmax(i, j));
}

std::string CoxeterGraph::to_string() const {
  std::string out;
  for (const auto &[e, m] : edges) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.first + 1) + "-" + std::to_string(e.second + 1) + ":" + std::to_string(m);
  }
  return out;
}

CoxeterGraph coxeter_graph(const IntersectionLattice &l, const std::vector<std::size_t> &hyperplanes) {
  CoxeterGraph g;
  g.vertices = hyperplanes.size();
  for (std::size_t i = 0; i < hyperplanes.size(); ++i)
    for (std::size_t j = i + 1; j < hyperplanes.size(); ++j) {
      std::size_t m = l.set(l.join(l.atom(hyperplanes[i]), l.atom(hyperplanes[j]))).count();
      if (m >= 3) g.set_label(i, j, m);
    }
  return g;
}

CoxeterGraph coxeter_graph(const ChamberComplex &cc, const Frame &f) {
  return coxeter_graph(cc.lattice(), f.hyperplanes);
}

CoxeterGraph relabel(const CoxeterGraph &g, const std::vector<std::size_t> &perm) {
  CoxeterGraph h;
  h.vertices = g.vertices;
  for (const auto &[e, m] : g.edges) h.set_label(perm[e.first], perm[e.second], m);
  return h;
}

std::optional<std::vector<std::size_t>> graph_isomorphism(const CoxeterGraph &g, const CoxeterGraph &h) {
  if (g.vertices != h.vertices || g.edges.size() != h.edges.size()) return std::nullopt;
  std::vector<std::size_t> perm(g.vertices);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(g, perm) == h) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool is_connected(const CoxeterGraph &g) {
  if (g.vertices == 0) return true;
  std::vector<bool> seen(g.vertices, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < g.vertices; ++w)
      if (!seen[w] && w != v && g.has_edge(v, w)) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.vertices;
}

bool SimpleGraph::has_edge(std::size_t i, std::size_t j) const { return edges.count(std::minmax(i, j)) > 0; }

SimpleGraph contract_edge(const CoxeterGraph &g, std::size_t a, std::size_t b) {
  if (a >= g.vertices || b >= g.vertices || !g.has_edge(a, b))
    throw CoxeterError("contraction needs an edge of the graph");
  auto image = [&](std::size_t v) { return v == b ? a - (a > b) : v - (v > b); };
  SimpleGraph out;
  out.vertices = g.vertices - 1;
  for (const auto &[e, m] : g.edges) {
    auto [u, w] = e;
    bool touches_u = u == a || u == b, touches_w = w == a || w == b;
    if (touches_u && touches_w) continue;
    // {a,c} or {b,c} becomes {ab,c}; other edges stay
    out.edges.insert(std::minmax(image(u), image(w)));
  }
  return out;
}

std::string to_string(CartanType t) {
  switch (t) {
    case CartanType::A: return "A";
    case CartanType::C: return "C";
    case CartanType::D: return "D";
    case CartanType::Dprime: return "D'";
    case CartanType::Other: return "other";
  }
  return "other";
}

IntMatrix cartan_template(CartanType t, std::size_t l) {
  auto path = [](std::size_t n, std::size_t from) {
    IntMatrix c(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
    for (std::size_t i = from; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
    return c;
  };
  switch (t) {
    case CartanType::A:
      if (l < 1) return {};
      return path(l, 0);
    case CartanType::C: {
      if (l < 2) return {};
      IntMatrix c = path(l, 0);
      c[1][0] = -2;
      return c;
    }
    case CartanType::D:
    case CartanType::Dprime: {
      if (l < 3) return {};
      // vertices 1 and 2 both attached to 3, then a path from 3
      IntMatrix c = path(l, 2);
      c[0][2] = c[2][0] = c[1][2] = c[2][1] = -1;
      if (t == CartanType::Dprime) c[0][1] = c[1][0] = -1;
      return c;
    }
    case CartanType::Other: return {};
  }
  return {};
}

CartanType classify_cartan_type(const IntMatrix &c) {
  const std::size_t l = c.size();
  if (l == 0 || l > 8) return CartanType::Other;
  for (CartanType t : {CartanType::A, CartanType::C, CartanType::D, CartanType::Dprime}) {
    IntMatrix m = cartan_template(t, l);
    if (m.empty()) continue;
    std::vector<std::size_t> p(l);
    std::iota(p.begin(), p.end(), 0);
    do {
      bool same = true;
      for (std::size_t i = 0; i < l && same; ++i)
        for (std::size_t j = 0; j < l && same; ++j) same = c[p[i]][p[j]] == m[i][j];
      if (same) return t;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return CartanType::Other;
}

std::optional<CartanMatrix> cartan_matrix(const Matrix &c) {
  CartanMatrix out;
  for (const auto &row : c) {
    out.entries.emplace_back();
    for (const auto &x : row) {
      if (!x.is_integer()) return std::nullopt;
      out.entries.back().push_back(boost::multiprecision::numerator(*x.to_rational()).convert_to<long long>());
    }
  }
  out.type = classify_cartan_type(out.entries);
  return out;
}

std::optional<CartanMatrix> cartan_matrix(const ChamberComplex &cc, const Frame &f) {
  return cartan_matrix(c_coefficients(cc, f));
}

namespace {

std::vector<std::size_t> bfs_chamber_order(const ChamberComplex &cc, std::size_t from) {
  std::vector<bool> seen(cc.size(), false);
  std::vector<std::size_t> order{from};
  seen[from] = true;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (auto nb : cc.chamber(order[k]).neighbors)
      if (!seen[nb]) {
        seen[nb] = true;
        order.push_back(nb);
      }
  return order;
}

bool same_up_to_order(const std::vector<Covector> &a, const std::vector<Covector> &b) {
  if (a.size() != b.size()) return false;
  for (const auto &x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) return false;
  return true;
}

Covector positive_form(Covector r) {
  auto it = std::find_if(r.begin(), r.end(), [](const Scalar &x) { return !x.is_zero(); });
  if (it != r.end() && it->sign() < 0) r = scaled(r, Scalar(-1));
  return r;
}

}  // namespace

ClosureResult root_system_closure(const ChamberComplex &cc, const Frame &start) {
  make_frame(cc, start.chamber, start.roots);
  ClosureResult out;
  std::vector<std::optional<Frame>> frames(cc.size());
  std::vector<Matrix> coefficients(cc.size());
  frames[start.chamber] = start;
  std::deque<std::size_t> queue{start.chamber};
  while (!queue.empty()) {
    const Frame f = *frames[queue.front()];
    queue.pop_front();
    Matrix &c = coefficients[f.chamber] = c_coefficients(cc, f);
    for (std::size_t i = 0; i < f.roots.size(); ++i) {
      Frame g = sigma(cc, f, i, c);
      auto &slot = frames[g.chamber];
      if (!slot) {
        queue.push_back(g.chamber);
        slot = std::move(g);
      } else if (!same_up_to_order(slot->roots, g.roots)) {
        out.conflict = std::make_pair(g.chamber, f.chamber);
        return out;
      }
    }
  }
  // one positive representative per hyperplane and per distinct scaling
  std::map<std::size_t, std::vector<Covector>> by_hyperplane;
  RootSystem r;
  for (auto &f : frames) {
    for (std::size_t j = 0; j < f->roots.size(); ++j) {
      auto &list = by_hyperplane[f->hyperplanes[j]];
      Covector p = positive_form(f->roots[j]);
      if (std::find(list.begin(), list.end(), p) == list.end()) list.push_back(std::move(p));
    }
    r.frames.push_back(std::move(*f));
  }
  r.coefficients = std::move(coefficients);
  for (auto &[h, list] : by_hyperplane)
    for (auto &p : list) {
      r.roots.push_back(p);
      r.roots.push_back(scaled(p, Scalar(-1)));
    }
  out.system = std::move(r);
  return out;
}

bool is_reduced(const ChamberComplex &cc, const RootSystem &r) {
  const Arrangement &a = cc.arrangement();
  std::vector<std::size_t> count(a.size(), 0);
  for (const auto &x : r.roots) {
    auto h = a.find(x);
    if (!h) return false;
    ++count[*h];
  }
  return std::all_of(count.begin(), count.end(), [](std::size_t n) { return n == 2; });
}

bool in_integer_span(const RootSystem &r) {
  for (const auto &f : r.frames) {
    auto inv = inverse(f.roots);
    if (!inv) return false;
    for (std::size_t t = 0; t < r.roots.size(); t += 2) {
      const Covector &v = r.roots[t];
      for (std::size_t j = 0; j < inv->size(); ++j) {
        Scalar x(0);
        for (std::size_t k = 0; k < v.size(); ++k) x += v[k] * (*inv)[k][j];
        if (!x.is_integer()) return false;
      }
    }
  }
  return true;
}

namespace {

bool in_table(CartanType t) { return t != CartanType::Other; }

std::vector<long long> divisors(long long n) {
  std::vector<long long> d;
  for (long long k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

// All positive rescalings of f with integer coefficients, up to a common
// factor on each connected piece.
std::vector<Frame> integral_rescalings(const ChamberComplex &cc, const Frame &f, const Matrix &c) {
  const std::size_t l = f.roots.size();
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      if (!(c[i][j] * c[j][i]).is_integer()) return {};
  // spanning forest of the support of c, parents before children
  std::vector<std::pair<std::size_t, std::size_t>> tree;
  std::vector<bool> seen(l, false);
  for (std::size_t r = 0; r < l; ++r) {
    if (seen[r]) continue;
    seen[r] = true;
    std::vector<std::size_t> order{r};
    for (std::size_t k = 0; k < order.size(); ++k)
      for (std::size_t w = 0; w < l; ++w)
        if (!seen[w] && !c[order[k]][w].is_zero()) {
          seen[w] = true;
          order.push_back(w);
          tree.emplace_back(order[k], w);
        }
  }
  std::vector<std::vector<long long>> choices;
  for (auto [p, v] : tree) {
    long long n = boost::multiprecision::numerator(*(c[p][v] * c[v][p]).to_rational()).convert_to<long long>();
    choices.push_back(divisors(n));
  }
  std::vector<Frame> out;
  std::vector<std::size_t> pick(tree.size(), 0);
  for (;;) {
    std::vector<Scalar> lambda(l, Scalar(1));
    for (std::size_t e = 0; e < tree.size(); ++e) {
      auto [p, v] = tree[e];
      // new c_pv = c_pv * lambda_v / lambda_p = -d
      lambda[v] = lambda[p] * Scalar(Rational(-choices[e][pick[e]])) / c[p][v];
    }
    bool integral = true;
    for (std::size_t i = 0; i < l && integral; ++i)
      for (std::size_t j = 0; j < l && integral; ++j)
        integral = i == j || (c[i][j] * lambda[j] / lambda[i]).is_integer();
    if (integral) {
      std::vector<Covector> roots;
      for (std::size_t i = 0; i < l; ++i) roots.push_back(scaled(f.roots[i], lambda[i]));
      out.push_back(make_frame(cc, f.chamber, std::move(roots)));
    }
    std::size_t e = 0;
    while (e < tree.size() && ++pick[e] == choices[e].size()) pick[e++] = 0;
    if (e == tree.size()) break;
  }
  return out;
}

}  // namespace

std::optional<CrystallographicWitness> is_crystallographic(const ChamberComplex &cc) {
  if (!is_simplicial_geometric(cc)) return std::nullopt;
  for (std::size_t k : bfs_chamber_order(cc, 0)) {
    Frame f = canonical_frame(cc, k);
    auto candidates = integral_rescalings(cc, f, c_coefficients(cc, f));
    if (candidates.empty()) continue;
    std::optional<CrystallographicWitness> fallback;
    for (auto &start : candidates) {
      ClosureResult res = root_system_closure(cc, start);
      if (!res.system || !is_reduced(cc, *res.system) || !in_integer_span(*res.system)) continue;
      CrystallographicWitness w{start, std::move(*res.system), {}};
      bool ok = true, tabled = true;
      for (const auto &c : w.system.coefficients) {
        auto cm = cartan_matrix(c);
        if (!cm) {
          ok = false;
          break;
        }
        tabled = tabled && in_table(cm->type);
        w.cartan.push_back(std::move(*cm));
      }
      if (!ok) continue;
      if (tabled) return w;
      if (!fallback) fallback = std::move(w);
    }
    // every root system restricts to one of these rescalings here
    return fallback;
  }
  return std::nullopt;
}

GraphChangeDiagram graph_change_diagram(const ChamberComplex &cc, const Frame &start) {
  GraphChangeDiagram d;
  std::map<CoxeterGraph, std::size_t> index;
  auto state_of = [&](const Frame &f) {
    CoxeterGraph g = coxeter_graph(cc, f);
    auto [it, fresh] = index.try_emplace(g, d.classes.size());
    if (fresh) {
      d.classes.push_back(std::move(g));
      d.next.emplace_back(f.roots.size(), SIZE_MAX);
      d.frames.push_back(0);
    }
    return it->second;
  };
  // the numbering only depends on the hyperplanes, so frames are kept canonical
  auto normalized = [&](const Frame &g) {
    Frame f = canonical_frame(cc, g.chamber);
    std::vector<Covector> roots;
    for (auto h : g.hyperplanes) {
      auto pos = std::lower_bound(f.hyperplanes.begin(), f.hyperplanes.end(), h) - f.hyperplanes.begin();
      roots.push_back(f.roots[pos]);
    }
    return make_frame(cc, g.chamber, std::move(roots));
  };
  std::set<std::pair<std::size_t, std::vector<std::size_t>>> seen;
  std::deque<Frame> queue{normalized(start)};
  seen.emplace(start.chamber, start.hyperplanes);
  while (!queue.empty()) {
    Frame f = std::move(queue.front());
    queue.pop_front();
    std::size_t s = state_of(f);
    ++d.frames[s];
    Matrix c = c_coefficients(cc, f);
    for (std::size_t i = 0; i < f.roots.size(); ++i) {
      Frame g = normalized(sigma(cc, f, i, c));
      std::size_t t = state_of(g);
      if (d.next[s][i] == SIZE_MAX)
        d.next[s][i] = t;
      else if (d.next[s][i] != t)
        d.deterministic = false;
      if (seen.emplace(g.chamber, g.hyperplanes).second) queue.push_back(std::move(g));
    }
  }
  return d;
}

GraphChangeDiagram graph_change_diagram(const ChamberComplex &cc) {
  return graph_change_diagram(cc, canonical_frame(cc, 0));
}

bool equivalent(const GraphChangeDiagram &d1, const GraphChangeDiagram &d2) {
  if (d1.classes.size() != d2.classes.size() || d1.classes.empty()) return d1.classes.size() == d2.classes.size();
  if (!d1.deterministic || !d2.deterministic) return false;
  const std::size_t l = d1.classes[0].vertices;
  if (d2.classes[0].vertices != l) return false;
  std::map<CoxeterGraph, std::size_t> index2;
  for (std::size_t s = 0; s < d2.classes.size(); ++s) index2[d2.classes[s]] = s;
  std::vector<std::size_t> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> phi;
    for (const auto &g : d1.classes) {
      auto it = index2.find(relabel(g, perm));
      if (it == index2.end()) break;
      phi.push_back(it->second);
    }
    if (phi.size() != d1.classes.size()) continue;
    bool same = true;
    for (std::size_t s = 0; s < phi.size() && same; ++s)
      for (std::size_t i = 0; i < l && same; ++i) same = d2.next[phi[s]][perm[i]] == phi[d1.next[s][i]];
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

RestrictedChamber restricted_chamber(const ChamberComplex &cc, const Frame &f, std::size_t a, std::size_t b) {
  if (a == b || a >= f.roots.size() || b >= f.roots.size()) throw CoxeterError("need two distinct frame positions");
  const Arrangement &arr = cc.arrangement();
  Frame ka = sigma(cc, f, a);
  Flat h = make_flat(arr, {ka.hyperplanes[b]});
  RestrictedChamber out{restriction_mapped(arr, h), {}, {}, {}};
  for (std::size_t j = 0; j < ka.roots.size(); ++j) {
    if (j == b) continue;
    // position a holds sigma_a(alpha) = -alpha, the image of the merged vertex
    Covector r(h.basis.size());
    for (std::size_t m = 0; m < h.basis.size(); ++m) r[m] = dot(ka.roots[j], h.basis[m]);
    out.roots.push_back(std::move(r));
    out.hyperplanes.push_back(*out.restriction.image[ka.hyperplanes[j]]);
  }
  out.graph = coxeter_graph(IntersectionLattice(out.restriction.arrangement), out.hyperplanes);
  return out;
}

}  // namespace arrango
