#include "arrango/checks.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "arrango/report.hpp"

namespace arrango {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string id) { r_.id = std::move(id); }

  bool expect(bool ok, const std::string &what) {
    r_.details.push_back((ok ? "ok   " : "FAIL ") + what);
    r_.passed = r_.passed && ok;
    return ok;
  }
  // one line for a family of checks
  void tally(const std::string &what, std::size_t failures, std::size_t total) {
    expect(failures == 0, what + " (" + std::to_string(total - failures) + "/" + std::to_string(total) + ")");
  }
  CheckResult done() { return std::move(r_); }

 private:
  CheckResult r_;
};

struct Named {
  std::string name;
  Arrangement a;
};

// Essential real instances; the first few are not simplicial.
std::vector<Named> real_catalog() {
  return {{"generic:3:5", gen::generic(3, 5)},
          {"generic:3:6", gen::generic(3, 6)},
          {"generic:4:6", gen::generic(4, 6)},
          {"boolean:3", gen::boolean(3)},
          {"boolean:4", gen::boolean(4)},
          {"braidA:3", gen::braid_A(3)},
          {"braidA:4", gen::braid_A(4)},
          {"reflC:3", gen::refl_C(3)},
          {"reflC:4", gen::refl_C(4)},
          {"reflD:4", gen::refl_D(4)},
          {"Alk:3:0", gen::A_lk(3, 0)},
          {"Alk:3:1", gen::A_lk(3, 1)},
          {"Alk:3:2", gen::A_lk(3, 2)},
          {"Alk:4:2", gen::A_lk(4, 2)},
          {"A(6,1)", gen::A_2n_1(3)},
          {"A(8,1)", gen::A_2n_1(4)},
          {"A(10,1)", gen::A_2n_1(5)},
          {"A(12,1)", gen::A_2n_1(6)},
          {"A(9,1)", gen::A_4n1_1(2)},
          {"A(13,1)", gen::A_4n1_1(3)},
          {"braidA:2 x boolean:1", product(gen::braid_A(2), gen::boolean(1))},
          {"generic:3:5 x boolean:1", product(gen::generic(3, 5), gen::boolean(1))}};
}

std::string yes(bool b) { return b ? "yes" : "no"; }

// The flat spanned by the hyperplanes with normals in the x1,x2-plane.
std::size_t pencil_flat(const IntersectionLattice &L) {
  IndexSet s(L.arrangement().size());
  for (std::size_t i = 0; i < L.arrangement().size(); ++i)
    if (L.arrangement().normal(i)[2].is_zero()) s.insert(i);
  return L.closure(s);
}

CheckResult s_values() {
  Recorder r("s-values");
  r.expect(s_value(gen::g314_sub()) == 0, "s(A) = 0 for the 18-plane subarrangement of G(3,1,4)");
  r.expect(s_value(gen::g314_C()) == 4, "s(C) = 4");
  r.expect(s_value(gen::g314_D()) == 4, "s(D) = 4");
  r.expect(s_value(gen::g314_A2()) == -4, "s(A_2) = -4");
  CharPoly expected = poly_from_roots({1, 4, 5});
  r.expect(char_poly(gen::g314_D()) == expected, "chi(A_1) = (t-1)(t-4)(t-5)");
  r.expect(char_poly(gen::g314_A2()) == expected, "chi(A_2) = (t-1)(t-4)(t-5)");
  r.expect(s_value(product(gen::g314_D(), gen::g314_A2())) == 0, "s(A_1 x A_2) = 0");
  return r.done();
}

CheckResult r1_family() {
  Recorder r("r1-family");
  for (std::size_t n = 3; n <= 8; ++n) {
    Arrangement a = gen::A_2n_1(n);
    const std::string tag = "A(" + std::to_string(2 * n) + ",1): ";
    ChamberComplex cc(a);
    const IntersectionLattice &L = cc.lattice();
    r.expect(is_irreducible(a), tag + "irreducible");
    r.expect(supersolvable_certificate(L).has_value(), tag + "supersolvable");
    bool geometric = is_simplicial_geometric(cc), combinatorial = s_value(L) == 0;
    r.expect(geometric && combinatorial, tag + "simplicial (geometric " + yes(geometric) + ", s = 0 " +
                                             yes(combinatorial) + ")");
    auto m = rank2_multiset(L);
    std::map<std::size_t, std::size_t> expected;
    expected[2] += n;
    expected[3] += L.level(2).size() - n - 1;
    expected[n] += 1;
    r.expect(m == expected, tag + "rank-2 multiset " + format_multiset(m));
    std::size_t x = pencil_flat(L);
    r.expect(L.rank_of(x) == 2 && L.set(x).count() == n && is_modular(L, x), tag + "pencil of " + std::to_string(n) +
                                                                                   " lines is modular");
    long long chi = std::llabs(L.char_poly()(-1));
    r.expect(cc.size() == 2 * n * (n + 1) && chi == static_cast<long long>(cc.size()),
             tag + std::to_string(cc.size()) + " chambers = |chi(-1)| = 2n(n+1)");
  }
  return r.done();
}

CheckResult r2_family() {
  Recorder r("r2-family");
  for (std::size_t n = 2; n <= 4; ++n) {
    Arrangement a = gen::A_4n1_1(n);
    const std::string tag = "A(" + std::to_string(4 * n + 1) + ",1): ";
    ChamberComplex cc(a);
    const IntersectionLattice &L = cc.lattice();
    auto m = rank2_multiset(L);
    std::map<std::size_t, std::size_t> expected;
    expected[2] += 3 * n;
    expected[3] += L.level(2).size() - 4 * n - 1;
    expected[4] += n;
    expected[2 * n] += 1;
    r.expect(m == expected, tag + "rank-2 multiset " + format_multiset(m));
    r.expect(supersolvable_certificate(L).has_value(), tag + "supersolvable");
    bool geometric = is_simplicial_geometric(cc), combinatorial = s_value(L) == 0;
    r.expect(geometric && combinatorial, tag + "simplicial (geometric " + yes(geometric) + ", s = 0 " +
                                             yes(combinatorial) + ")");
  }
  return r.done();
}

CheckResult charpoly_iso() {
  Recorder r("charpoly-iso");
  IntersectionLattice a9(gen::A_4n1_1(2));
  r.expect(a9.char_poly() == poly_from_roots({1, 3, 5}), "chi(A(9,1)) = " + a9.char_poly().to_string());
  r.expect(lattice_isomorphism(a9, IntersectionLattice(gen::refl_C(3))).has_value(), "L(A(9,1)) = L(A(B_3))");
  r.expect(lattice_isomorphism(IntersectionLattice(gen::A_2n_1(3)), IntersectionLattice(gen::braid_A(3))).has_value(),
           "L(A(6,1)) = L(A(A_3))");
  return r.done();
}

CheckResult simplicial_equivalence() {
  Recorder r("simplicial-equivalence");
  std::size_t simplicial = 0, total = 0;
  for (const auto &[name, a] : real_catalog()) {
    ChamberComplex cc(a);
    bool geometric = is_simplicial_geometric(cc);
    long long s = s_value(cc.lattice());
    r.expect(geometric == (s == 0), name + ": geometric " + yes(geometric) + ", s = " + std::to_string(s));
    simplicial += geometric;
    ++total;
  }
  r.expect(total >= 15 && simplicial < total && simplicial > 0,
           std::to_string(total) + " instances, " + std::to_string(simplicial) + " simplicial");
  return r.done();
}

CheckResult main_theorem() {
  Recorder r("main-theorem");
  for (std::size_t l = 4; l <= 5; ++l) {
    const std::string ls = std::to_string(l);
    std::vector<Named> family = {{"A(A_" + ls + ")", gen::braid_A(l)},
                                 {"A(C_" + ls + ")", gen::refl_C(l)},
                                 {"A_" + ls + "^" + std::to_string(l - 1), gen::A_lk(l, l - 1)}};
    for (const auto &[name, a] : family) {
      ChamberComplex cc(a);
      const IntersectionLattice &L = cc.lattice();
      r.expect(is_irreducible(a), name + ": irreducible");
      r.expect(supersolvable_certificate(L).has_value(), name + ": supersolvable");
      r.expect(is_simplicial_geometric(cc), name + ": simplicial");
      auto w = is_crystallographic(cc);
      r.expect(w.has_value(), name + ": crystallographic");
      if (w) {
        std::map<std::string, std::size_t> types;
        bool tabled = true;
        for (const auto &c : w->cartan) {
          ++types[to_string(c.type)];
          tabled = tabled && c.type != CartanType::Other;
        }
        std::string list;
        for (const auto &[t, n] : types) list += (list.empty() ? "" : ", ") + t + " x" + std::to_string(n);
        r.expect(tabled, name + ": chamber Cartan types " + list);
      }
      auto m = rank2_multiset(L);
      r.expect(m.rbegin()->first <= 4, name + ": rank-2 multiset " + format_multiset(m));
    }
  }
  Arrangement d4 = gen::refl_D(4);
  ChamberComplex cc(d4);
  r.expect(is_simplicial_geometric(cc), "A(D_4): simplicial");
  r.expect(is_irreducible(d4), "A(D_4): irreducible");
  r.expect(!supersolvable_certificate(cc.lattice()), "A(D_4): not supersolvable");
  return r.done();
}

CheckResult graph_change(const std::string &id, const std::vector<std::string> &which) {
  Recorder r(id);
  for (const auto &name : which) {
    ChamberComplex cc(gen::by_name(name));
    GraphChangeDiagram d = graph_change_diagram(cc);
    GraphChangeDiagram e = expected_diagram(name);
    r.expect(d.deterministic, name + ": transitions depend only on the numbered graph");
    r.expect(d.classes.size() == e.classes.size(), name + ": " + std::to_string(d.classes.size()) + " classes");
    r.expect(equivalent(d, e), name + ": matches the drawn diagram up to renumbering");
  }
  return r.done();
}

CheckResult reflection_data() {
  Recorder r("reflection-data");
  for (const auto &[name, a] : std::vector<Named>{{"A(8,1)", gen::A_2n_1(4)}, {"A(9,1)", gen::A_4n1_1(2)},
                                                  {"Alk:4:3", gen::A_lk(4, 3)}}) {
    ChamberComplex cc(a);
    const IntersectionLattice &L = cc.lattice();
    std::size_t det_bad = 0, sign_bad = 0, zero_bad = 0, m3_bad = 0, keep_bad = 0, n = 0;
    for (std::size_t k = 0; k < cc.size(); ++k) {
      Frame f = canonical_frame(cc, k);
      Matrix c = c_coefficients(cc, f);
      const std::size_t l = c.size();
      for (std::size_t i = 0; i < l; ++i) {
        ++n;
        det_bad += !(determinant(reflection_matrix(c, i)) == Scalar(-1));
        Matrix ci = c_coefficients(cc, sigma(cc, f, i, c));
        for (std::size_t j = 0; j < l; ++j) {
          if (j == i) continue;
          sign_bad += c[i][j].sign() > 0;
          std::size_t m = L.set(L.join(L.atom(f.hyperplanes[i]), L.atom(f.hyperplanes[j]))).count();
          zero_bad += (m == 2) != c[i][j].is_zero();
          if (m == 3) m3_bad += !(c[j][i] * c[i][j] == Scalar(1));
          if (c[i][j].is_zero())
            for (std::size_t t = 0; t < l; ++t) keep_bad += !(ci[j][t] == c[j][t]);
        }
      }
    }
    r.tally(name + ": det S_i = -1", det_bad, n);
    r.tally(name + ": off-diagonal c_ij <= 0", sign_bad, n);
    r.tally(name + ": m = 2 iff c_ij = 0", zero_bad, n);
    r.tally(name + ": m = 3 implies c_ji = 1/c_ij", m3_bad, n);
    r.tally(name + ": c_ij = 0 keeps row j in K_i", keep_bad, n);
  }
  return r.done();
}

CheckResult hansen_motzkin() {
  Recorder r("hansen-motzkin");
  for (const auto &[name, a] : real_catalog()) {
    if (a.dim() < 3) continue;
    IntersectionLattice L(a);
    try {
      auto w = hansen_motzkin_witness(L);
      IndexSet expect = L.set(w.y);
      expect.insert(w.hyperplane);
      bool ok = L.rank_of(w.x) == a.dim() - 1 && L.rank_of(w.y) == a.dim() - 2 && L.set(w.x) == expect;
      r.expect(ok, name + ": A_X = A_Y + {H} with |A_X| = " + std::to_string(L.set(w.x).count()));
    } catch (const LatticeError &e) {
      r.expect(false, name + ": " + e.what());
    }
  }
  return r.done();
}

CheckResult restriction_bound() {
  Recorder r("restriction-bound");
  std::vector<Named> family;
  for (std::size_t n = 3; n <= 6; ++n) family.push_back({"A(" + std::to_string(2 * n) + ",1)", gen::A_2n_1(n)});
  for (std::size_t m = 2; m <= 3; ++m) family.push_back({"A(" + std::to_string(4 * m + 1) + ",1)", gen::A_4n1_1(m)});
  for (const auto &[name, a] : family) {
    IntersectionLattice L(a);
    const std::size_t bound = (a.size() + 3) / 4 + 1;
    std::size_t low = 0, bad = 0, pairs = 0, count_bad = 0;
    std::string smallest;
    for (std::size_t h = 0; h < a.size(); ++h) {
      std::size_t rh = restriction(a, make_flat(a, {h})).size();
      // the lines of A^H are the rank-2 flats through H, covering A - {H} once
      std::size_t through = 0, covered = 0;
      for (auto x : L.level(2))
        if (L.set(x).contains(h)) {
          ++through;
          covered += L.set(x).count() - 1;
        }
      count_bad += through != rh || covered + 1 != a.size();
      if (rh < bound) {
        ++low;
        smallest += " H" + std::to_string(h + 1) + ":" + std::to_string(rh);
      }
      for (auto x : L.level(2)) {
        if (!is_modular(L, x) || L.set(x).contains(h)) continue;
        ++pairs;
        bad += rh != L.set(x).count();
      }
    }
    r.tally(name + ": |A^H| counts the rank-2 flats through H", count_bad, a.size());
    r.tally(name + ": |A^H| >= " + std::to_string(bound) + (smallest.empty() ? "" : ", below at" + smallest), low,
            a.size());
    r.tally(name + ": |A^H| = |A_X| for modular X and H outside A_X", bad, pairs);
  }
  return r.done();
}

std::optional<std::size_t> position_in(const std::vector<CoxeterGraph> &list, const CoxeterGraph &g) {
  for (std::size_t t = 0; t < list.size(); ++t)
    if (graph_isomorphism(g, list[t])) return t;
  return std::nullopt;
}

CoxeterGraph labeled(std::size_t n, std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> edges) {
  CoxeterGraph g;
  g.vertices = n;
  for (auto [i, j, m] : edges) g.set_label(i - 1, j - 1, m);
  return g;
}

// Walls of K through a random flat: the chamber of the localization and its
// graph against the induced subgraph.
std::pair<std::size_t, std::size_t> localization_graphs(const ChamberComplex &cc) {
  const Arrangement &a = cc.arrangement();
  const IntersectionLattice &L = cc.lattice();
  std::map<std::size_t, std::pair<Derived, ChamberComplex>> cache;
  std::size_t bad = 0, total = 0;
  for (std::size_t k = 0; k < cc.size(); ++k) {
    Frame f = canonical_frame(cc, k);
    CoxeterGraph g = coxeter_graph(cc, f);
    const std::size_t l = f.hyperplanes.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << l); ++mask) {
      IndexSet gens(a.size());
      for (std::size_t j = 0; j < l; ++j)
        if (mask >> j & 1) gens.insert(f.hyperplanes[j]);
      std::size_t x = L.closure(gens);
      auto it = cache.find(x);
      if (it == cache.end()) {
        Derived loc = essentialize_mapped(subarrangement(a, L.set(x)));
        ChamberComplex cx(loc.arrangement);
        it = cache.emplace(x, std::make_pair(std::move(loc), std::move(cx))).first;
      }
      const auto &[loc, cx] = it->second;
      auto items = L.set(x).items();
      auto local = [&](std::size_t h) {
        return std::size_t(std::lower_bound(items.begin(), items.end(), h) - items.begin());
      };
      SignVector s(cx.arrangement().size(), '0');
      for (std::size_t t = 0; t < items.size(); ++t) {
        bool plus = (cc.chamber(k).signs[items[t]] == '+') == (loc.factor[t].sign() > 0);
        s[*loc.image[t]] = plus ? '+' : '-';
      }
      std::vector<std::size_t> keep, walls;
      for (std::size_t j = 0; j < l; ++j)
        if (L.set(x).contains(f.hyperplanes[j])) {
          keep.push_back(j);
          walls.push_back(*loc.image[local(f.hyperplanes[j])]);
        }
      ++total;
      auto kx = cx.find(s);
      std::vector<std::size_t> sorted = walls;
      std::sort(sorted.begin(), sorted.end());
      if (!kx || cx.chamber(*kx).walls != sorted) {
        ++bad;
        continue;
      }
      CoxeterGraph gx = coxeter_graph(cx.lattice(), walls);
      bool same = true;
      for (std::size_t u = 0; u < keep.size(); ++u)
        for (std::size_t w = u + 1; w < keep.size(); ++w) same = same && gx.label(u, w) == g.label(keep[u], keep[w]);
      bad += !same;
    }
  }
  return {bad, total};
}

struct ResTally {
  std::size_t chamber_bad = 0, embed_bad = 0, label_bad = 0, triangle_bad = 0, total = 0;
};

ResTally restriction_graphs(const ChamberComplex &cc) {
  ResTally t;
  std::map<std::size_t, ChamberComplex> cache;
  for (std::size_t k = 0; k < cc.size(); ++k) {
    Frame f = canonical_frame(cc, k);
    CoxeterGraph g = coxeter_graph(cc, f);
    for (std::size_t x = 0; x < g.vertices; ++x)
      for (std::size_t y = 0; y < g.vertices; ++y) {
        if (x == y || !g.has_edge(x, y)) continue;
        ++t.total;
        RestrictedChamber rc = restricted_chamber(cc, f, x, y);
        std::size_t hkey = sigma(cc, f, x).hyperplanes[y];
        auto it = cache.find(hkey);
        if (it == cache.end()) it = cache.emplace(hkey, ChamberComplex(rc.restriction.arrangement)).first;
        const ChamberComplex &ch = it->second;
        // a point with all restricted roots equal to 1
        auto inv = inverse(rc.roots);
        bool chamber_ok = inv.has_value();
        if (chamber_ok) {
          Covector p(inv->size(), Scalar(0));
          for (std::size_t a = 0; a < inv->size(); ++a)
            for (std::size_t b = 0; b < inv->size(); ++b) p[a] += (*inv)[a][b];
          auto kh = ch.find(sign_vector(ch.arrangement(), p));
          chamber_ok = kh && ch.chamber(*kh).walls.size() == rc.roots.size();
          if (chamber_ok) {
            try {
              chamber_ok = coxeter_graph(ch, make_frame(ch, *kh, rc.roots)) == rc.graph;
            } catch (const ChamberError &) {
              chamber_ok = false;
            }
          }
        }
        t.chamber_bad += !chamber_ok;
        SimpleGraph contracted = contract_edge(g, x, y);
        for (auto [u, w] : contracted.edges) t.embed_bad += !rc.graph.has_edge(u, w);
        auto image = [&](std::size_t v) { return v - (v > y); };
        for (std::size_t z = 0; z < g.vertices; ++z) {
          if (z == x || z == y || !g.has_edge(x, z)) continue;
          std::size_t mh = rc.graph.label(image(x), image(z));
          t.label_bad += mh < g.label(x, z);
          if (g.has_edge(y, z)) t.triangle_bad += mh + 2 < g.label(x, z) + g.label(y, z);
        }
      }
  }
  return t;
}

CheckResult coxeter_graphs() {
  Recorder r("coxeter-graphs");
  std::vector<Named> rank3;
  for (std::size_t n = 3; n <= 8; ++n) rank3.push_back({"A(" + std::to_string(2 * n) + ",1)", gen::A_2n_1(n)});
  for (std::size_t m = 2; m <= 4; ++m) rank3.push_back({"A(" + std::to_string(4 * m + 1) + ",1)", gen::A_4n1_1(m)});
  for (const auto &[name, a] : rank3) {
    ChamberComplex cc(a);
    const IntersectionLattice &L = cc.lattice();
    std::size_t n = 0;
    for (auto x : L.level(2))
      if (is_modular(L, x)) n = std::max(n, L.set(x).count());
    std::vector<CoxeterGraph> list = {labeled(3, {{1, 2, n}, {2, 3, 3}}), labeled(3, {{1, 2, 4}, {2, 3, 3}}),
                                      labeled(3, {{1, 2, 3}, {2, 3, 3}}),
                                      labeled(3, {{1, 2, 3}, {2, 3, 3}, {1, 3, 3}}),
                                      labeled(3, {{1, 2, 4}, {2, 3, 3}, {1, 3, 3}})};
    std::size_t outside = 0;
    std::set<std::size_t> seen;
    for (std::size_t k = 0; k < cc.size(); ++k) {
      auto t = position_in(list, coxeter_graph(cc, canonical_frame(cc, k)));
      if (t)
        seen.insert(*t + 1);
      else
        ++outside;
    }
    std::string found;
    for (auto t : seen) found += (found.empty() ? "" : ",") + std::to_string(t);
    r.tally(name + ": chamber graphs in the rank-3 list, seen {" + found + "}", outside, cc.size());
  }
  for (const auto &[name, a] : std::vector<Named>{{"A(9,1)", gen::A_4n1_1(2)}, {"Alk:4:3", gen::A_lk(4, 3)},
                                                  {"reflC:4", gen::refl_C(4)}}) {
    auto [bad, total] = localization_graphs(ChamberComplex(a));
    r.tally(name + ": localization graphs are induced subgraphs", bad, total);
  }
  for (const auto &[name, a] : std::vector<Named>{{"A(9,1)", gen::A_4n1_1(2)}, {"Alk:4:3", gen::A_lk(4, 3)}}) {
    ResTally t = restriction_graphs(ChamberComplex(a));
    r.tally(name + ": restricted bases bound a chamber of A^H with that graph", t.chamber_bad, t.total);
    r.tally(name + ": contracted edges embed in the restriction graph", t.embed_bad, t.total);
    r.tally(name + ": m^H(rho(ab), rho(c)) >= m(a, c)", t.label_bad, t.total);
    r.tally(name + ": triangle case m^H >= m(a,c) + m(b,c) - 2", t.triangle_bad, t.total);
  }
  return r.done();
}

CheckResult products() {
  Recorder r("products");
  std::vector<Named> pool = {{"boolean:1", gen::boolean(1)},   {"boolean:2", gen::boolean(2)},
                             {"braidA:2", gen::braid_A(2)},    {"braidA:3", gen::braid_A(3)},
                             {"reflC:2", gen::refl_C(2)},      {"reflC:3", gen::refl_C(3)},
                             {"A(6,1)", gen::A_2n_1(3)},       {"A(9,1)", gen::A_4n1_1(2)},
                             {"generic:3:5", gen::generic(3, 5)}, {"generic:3:4", gen::generic(3, 4)},
                             {"Alk:3:1", gen::A_lk(3, 1)},     {"generic:2:4", gen::generic(2, 4)}};
  std::mt19937 rng(12);
  int done = 0;
  while (done < 20) {
    const Named &p = pool[rng() % pool.size()], &q = pool[rng() % pool.size()];
    if (p.a.dim() + q.a.dim() > 6) continue;
    ++done;
    const std::string tag = p.name + " x " + q.name + ": ";
    Arrangement pq = product(p.a, q.a);
    IntersectionLattice l1(p.a), l2(q.a), l(pq);
    r.expect(l.char_poly() == multiply(l1.char_poly(), l2.char_poly()), tag + "chi multiplies");
    long long s1 = s_value(l1), s2 = s_value(l2);
    long long c1 = std::llabs(l1.char_poly()(-1)), c2 = std::llabs(l2.char_poly()(-1));
    r.expect(s_value(l) == c2 * s1 + c1 * s2, tag + "s = " + std::to_string(s_value(l)));
    bool ss = supersolvable_certificate(l).has_value();
    bool ss1 = supersolvable_certificate(l1).has_value(), ss2 = supersolvable_certificate(l2).has_value();
    r.expect(ss == (ss1 && ss2), tag + "supersolvable " + yes(ss));
    bool simp = is_simplicial_geometric(ChamberComplex(pq));
    bool simp1 = is_simplicial_geometric(ChamberComplex(p.a)), simp2 = is_simplicial_geometric(ChamberComplex(q.a));
    r.expect(simp == (simp1 && simp2), tag + "simplicial " + yes(simp));
  }
  return r.done();
}

const std::map<std::string, std::function<CheckResult()>> &registry() {
  static const std::map<std::string, std::function<CheckResult()>> r = {
      {"s-values", s_values},
      {"r1-family", r1_family},
      {"r2-family", r2_family},
      {"charpoly-iso", charpoly_iso},
      {"simplicial-equivalence", simplicial_equivalence},
      {"main-theorem", main_theorem},
      {"graph-change", [] { return graph_change("graph-change", {"A(6,1)", "A(8,1)", "A(9,1)"}); }},
      {"graph-change-A61", [] { return graph_change("graph-change-A61", {"A(6,1)"}); }},
      {"graph-change-A81", [] { return graph_change("graph-change-A81", {"A(8,1)"}); }},
      {"graph-change-A91", [] { return graph_change("graph-change-A91", {"A(9,1)"}); }},
      {"reflection-data", reflection_data},
      {"hansen-motzkin", hansen_motzkin},
      {"restriction-bound", restriction_bound},
      {"coxeter-graphs", coxeter_graphs},
      {"products", products},
  };
  return r;
}

}  // namespace

const std::vector<CheckSuite> &check_suites() {
  static const std::vector<CheckSuite> suites = {
      {"s-values", "s(A) of the G(3,1,4) examples and their product"},
      {"r1-family", "A(2n,1), n = 3..8"},
      {"r2-family", "A(4n+1,1), n = 2..4"},
      {"charpoly-iso", "chi(A(9,1)) and lattice isomorphisms"},
      {"simplicial-equivalence", "geometric simpliciality iff s(A) = 0"},
      {"main-theorem", "rank 4 and 5 instances and the D_4 negative"},
      {"graph-change", "graph-change diagrams of A(6,1), A(8,1), A(9,1)"},
      {"reflection-data", "c_ij and sigma invariants on every chamber"},
      {"hansen-motzkin", "Hansen-Motzkin witnesses"},
      {"restriction-bound", "sizes of restrictions in rank 3"},
      {"coxeter-graphs", "rank-3 graph list, localization and restriction graphs"},
      {"products", "product laws on 20 random pairs"},
      {"graph-change-A61", "graph-change diagram of A(6,1)"},
      {"graph-change-A81", "graph-change diagram of A(8,1)"},
      {"graph-change-A91", "graph-change diagram of A(9,1)"},
  };
  return suites;
}

CheckResult run_check(const std::string &id) {
  auto it = registry().find(id);
  if (it == registry().end()) throw std::invalid_argument("unknown check suite '" + id + "'");
  return it->second();
}

GraphChangeDiagram expected_diagram(const std::string &name) {
  GraphChangeDiagram d;
  auto add = [&](CoxeterGraph g, std::vector<std::size_t> next) {
    d.classes.push_back(std::move(g));
    d.next.push_back(std::move(next));
    d.frames.push_back(0);
  };
  if (name == "A(6,1)") {
    add(labeled(3, {{1, 2, 3}, {2, 3, 3}}), {0, 0, 0});
  } else if (name == "A(9,1)") {
    add(labeled(3, {{1, 2, 3}, {2, 3, 4}}), {0, 0, 0});
  } else if (name == "A(8,1)") {
    // two paths with labels (3,4) and (3,3), the triangle, and the same two
    // paths with vertices 2 and 3 exchanged
    add(labeled(3, {{1, 2, 3}, {2, 3, 4}}), {1, 0, 0});
    add(labeled(3, {{1, 2, 3}, {2, 3, 3}}), {0, 2, 1});
    add(labeled(3, {{1, 2, 3}, {2, 3, 3}, {1, 3, 3}}), {2, 1, 3});
    add(labeled(3, {{1, 3, 3}, {3, 2, 3}}), {4, 3, 2});
    add(labeled(3, {{1, 3, 3}, {3, 2, 4}}), {3, 4, 4});
  } else {
    throw std::invalid_argument("no drawn diagram for " + name);
  }
  return d;
}

}  // namespace arrango
