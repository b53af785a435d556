#include <map>
#include <random>

#include "arrango/coxeter.hpp"
#include "doctest.h"

using namespace arrango;

namespace {

Scalar q(long p, long d = 1) { return Scalar(Rational(p, d)); }

CoxeterGraph graph(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, std::size_t>> edges) {
  CoxeterGraph g;
  g.vertices = n;
  // 1-based, as drawn
  for (auto [i, j, m] : edges) g.set_label(i - 1, j - 1, m);
  return g;
}

// The five graphs allowed in rank 3; the first carries the modular label n.
std::vector<CoxeterGraph> rank3_list(std::size_t n) {
  return {graph(3, {{1, 2, n}, {2, 3, 3}}), graph(3, {{1, 2, 4}, {2, 3, 3}}), graph(3, {{1, 2, 3}, {2, 3, 3}}),
          graph(3, {{1, 2, 3}, {2, 3, 3}, {1, 3, 3}}), graph(3, {{1, 2, 4}, {2, 3, 3}, {1, 3, 3}})};
}

std::optional<std::size_t> position_in(const std::vector<CoxeterGraph> &list, const CoxeterGraph &g) {
  for (std::size_t t = 0; t < list.size(); ++t)
    if (graph_isomorphism(g, list[t])) return t;
  return std::nullopt;
}

// Transition tables as drawn; next[s] lists the class after sigma_1, sigma_2, sigma_3.
GraphChangeDiagram drawn(std::vector<CoxeterGraph> classes, std::vector<std::vector<std::size_t>> next) {
  GraphChangeDiagram d;
  d.classes = std::move(classes);
  d.next = std::move(next);
  d.frames.assign(d.classes.size(), 0);
  return d;
}

GraphChangeDiagram drawn_A61() { return drawn({graph(3, {{1, 2, 3}, {2, 3, 3}})}, {{0, 0, 0}}); }
GraphChangeDiagram drawn_A91() { return drawn({graph(3, {{1, 2, 3}, {2, 3, 4}})}, {{0, 0, 0}}); }
GraphChangeDiagram drawn_A81() {
  // P1, P2, T, Q1, Q2
  return drawn({graph(3, {{1, 2, 3}, {2, 3, 4}}), graph(3, {{1, 2, 3}, {2, 3, 3}}),
                graph(3, {{1, 2, 3}, {2, 3, 3}, {1, 3, 3}}), graph(3, {{1, 3, 3}, {3, 2, 3}}),
                graph(3, {{1, 3, 3}, {3, 2, 4}})},
               {{1, 0, 0}, {0, 2, 1}, {2, 1, 3}, {4, 3, 2}, {3, 4, 4}});
}

std::vector<Arrangement> simplicial_catalog() {
  return {gen::boolean(3),   gen::braid_A(3),   gen::refl_C(3),    gen::refl_D(4),   gen::A_lk(3, 1),
          gen::A_lk(4, 3),   gen::A_2n_1(3),    gen::A_2n_1(4),    gen::A_2n_1(5),   gen::A_4n1_1(2),
          product(gen::braid_A(2), gen::boolean(1)), product(gen::A_2n_1(3), gen::boolean(1))};
}

// Largest modular line of a rank-3 lattice.
std::size_t modular_size(const IntersectionLattice &L) {
  std::size_t n = 0;
  for (auto x : L.level(2))
    if (is_modular(L, x)) n = std::max(n, L.set(x).count());
  return n;
}

}  // namespace

TEST_CASE("graph basics") {
  CoxeterGraph path = graph(3, {{1, 2, 3}, {2, 3, 4}});
  CHECK(path.label(0, 1) == 3);
  CHECK(path.label(2, 1) == 4);
  CHECK(path.label(0, 2) == 2);
  CHECK(path.to_string() == "1-2:3 2-3:4");
  SimpleGraph c = contract_edge(path, 0, 1);
  CHECK(c.vertices == 2);
  CHECK(c.edges == std::set<std::pair<std::size_t, std::size_t>>{{0, 1}});
  CoxeterGraph tri = graph(3, {{1, 2, 3}, {2, 3, 3}, {1, 3, 5}});
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      if (a != b) CHECK(contract_edge(tri, a, b).edges.size() == 1);
  CHECK_THROWS_AS(contract_edge(path, 0, 2), CoxeterError);
  // merged vertex keeps the first number
  CoxeterGraph star = graph(4, {{1, 2, 3}, {2, 3, 3}, {2, 4, 3}});
  SimpleGraph s = contract_edge(star, 2, 1);
  CHECK(s.edges == std::set<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});

  CHECK(is_connected(graph(1, {})));
  CHECK(is_connected(path));
  CHECK_FALSE(is_connected(graph(3, {{1, 2, 3}})));
  CHECK(graph_isomorphism(path, graph(3, {{3, 1, 4}, {1, 2, 3}})));
  CHECK_FALSE(graph_isomorphism(path, graph(3, {{1, 2, 3}, {2, 3, 3}})));
}

TEST_CASE("Coxeter graphs of reflection arrangements") {
  ChamberComplex b3(gen::refl_C(3));
  for (std::size_t k = 0; k < b3.size(); ++k) {
    CoxeterGraph g = coxeter_graph(b3, canonical_frame(b3, k));
    CHECK(graph_isomorphism(g, graph(3, {{1, 2, 3}, {2, 3, 4}})));
  }
  ChamberComplex a3(gen::braid_A(3));
  for (std::size_t k = 0; k < a3.size(); ++k)
    CHECK(graph_isomorphism(coxeter_graph(a3, canonical_frame(a3, k)), graph(3, {{1, 2, 3}, {2, 3, 3}})));
  ChamberComplex red(product(gen::braid_A(2), gen::boolean(1)));
  for (std::size_t k = 0; k < red.size(); ++k) CHECK_FALSE(is_connected(coxeter_graph(red, canonical_frame(red, k))));
}

TEST_CASE("connected graphs exactly for irreducible arrangements") {
  for (const auto &a : simplicial_catalog()) {
    ChamberComplex cc(a);
    bool irreducible = is_irreducible(a);
    for (std::size_t k = 0; k < cc.size(); ++k)
      CHECK_MESSAGE(is_connected(coxeter_graph(cc, canonical_frame(cc, k))) == irreducible, write_arrangement(a));
  }
}

TEST_CASE("rank 3 chamber graphs lie in the five-graph list") {
  std::vector<Arrangement> cases;
  for (std::size_t n = 3; n <= 7; ++n) cases.push_back(gen::A_2n_1(n));
  for (std::size_t m = 2; m <= 3; ++m) cases.push_back(gen::A_4n1_1(m));
  for (const auto &a : cases) {
    ChamberComplex cc(a);
    const std::size_t n = modular_size(cc.lattice());
    REQUIRE(n >= 3);
    auto list = rank3_list(n);
    std::set<std::size_t> seen;
    for (std::size_t k = 0; k < cc.size(); ++k) {
      auto t = position_in(list, coxeter_graph(cc, canonical_frame(cc, k)));
      REQUIRE_MESSAGE(t, write_arrangement(a));
      seen.insert(*t);
    }
    // some chamber touches the modular line
    CHECK(seen.count(0));
    if (a.size() % 2 == 0 || n <= 5) CHECK_FALSE(seen.count(4));
    if (n > 4 && a.size() % 2 == 0) CHECK_FALSE(seen.count(1));
  }
}

TEST_CASE("edges persist and labels survive across far walls") {
  for (const auto &a : simplicial_catalog()) {
    ChamberComplex cc(a);
    for (std::size_t k = 0; k < cc.size(); ++k) {
      Frame f = canonical_frame(cc, k);
      CoxeterGraph g = coxeter_graph(cc, f);
      const std::size_t l = g.vertices;
      for (std::size_t i = 0; i < l; ++i) {
        CoxeterGraph gi = coxeter_graph(cc, sigma(cc, f, i));
        for (std::size_t j = 0; j < l; ++j)
          for (std::size_t t = 0; t < l; ++t) {
            if (j == i || t == j || t == i) continue;
            if (!g.has_edge(i, j) && g.has_edge(j, t)) CHECK(gi.has_edge(j, t));
          }
        // crossing a wall adjacent to neither end keeps the label
        for (const auto &[e, m] : g.edges) {
          if (e.first == i || e.second == i || g.has_edge(i, e.first) || g.has_edge(i, e.second)) continue;
          CHECK(gi.label(e.first, e.second) == m);
        }
      }
    }
  }
}

TEST_CASE("localization graphs are induced subgraphs") {
  for (const auto &a : {gen::A_lk(4, 3), gen::refl_C(4), gen::A_2n_1(5), gen::refl_D(4)}) {
    ChamberComplex cc(a);
    const IntersectionLattice &L = cc.lattice();
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t k = rng() % cc.size();
      Frame f = canonical_frame(cc, k);
      CoxeterGraph g = coxeter_graph(cc, f);
      // a flat spanned by a random set of walls
      std::vector<std::size_t> pos;
      for (std::size_t j = 0; j < f.hyperplanes.size(); ++j)
        if (rng() % 2) pos.push_back(j);
      if (pos.empty()) continue;
      IndexSet gens(a.size());
      for (auto j : pos) gens.insert(f.hyperplanes[j]);
      const IndexSet &ax = L.set(L.closure(gens));
      Derived loc = essentialize_mapped(subarrangement(a, ax));
      ChamberComplex cx(loc.arrangement);
      // chamber of A_X containing K
      auto items = ax.items();
      SignVector s(cx.arrangement().size(), '0');
      for (std::size_t t = 0; t < items.size(); ++t) {
        bool plus = (cc.chamber(k).signs[items[t]] == '+') == (loc.factor[t].sign() > 0);
        s[*loc.image[t]] = plus ? '+' : '-';
      }
      auto kx = cx.find(s);
      REQUIRE(kx);
      // its walls are the walls of K that contain X
      std::vector<std::size_t> expected;
      for (std::size_t j = 0; j < f.hyperplanes.size(); ++j)
        if (ax.contains(f.hyperplanes[j])) expected.push_back(*loc.image[std::find(items.begin(), items.end(), f.hyperplanes[j]) - items.begin()]);
      std::vector<std::size_t> sorted = expected;
      std::sort(sorted.begin(), sorted.end());
      CHECK(cx.chamber(*kx).walls == sorted);
      CoxeterGraph gx = coxeter_graph(cx.lattice(), expected);
      std::vector<std::size_t> keep;
      for (std::size_t j = 0; j < f.hyperplanes.size(); ++j)
        if (ax.contains(f.hyperplanes[j])) keep.push_back(j);
      for (std::size_t u = 0; u < keep.size(); ++u)
        for (std::size_t w = u + 1; w < keep.size(); ++w) CHECK(gx.label(u, w) == g.label(keep[u], keep[w]));
    }
  }
}

TEST_CASE("restricted chamber graphs contain the contraction") {
  for (const auto &a : {gen::A_4n1_1(2), gen::A_lk(4, 3)}) {
    ChamberComplex cc(a);
    std::map<std::size_t, ChamberComplex> restricted;
    std::size_t checked = 0;
    for (std::size_t k = 0; k < cc.size(); ++k) {
      Frame f = canonical_frame(cc, k);
      CoxeterGraph g = coxeter_graph(cc, f);
      for (std::size_t x = 0; x < g.vertices; ++x)
        for (std::size_t y = 0; y < g.vertices; ++y) {
          if (x == y || !g.has_edge(x, y)) continue;
          RestrictedChamber rc = restricted_chamber(cc, f, x, y);
          // the restricted roots bound a chamber of A^H with these walls
          std::size_t hkey = sigma(cc, f, x).hyperplanes[y];
          auto it = restricted.find(hkey);
          if (it == restricted.end()) it = restricted.emplace(hkey, ChamberComplex(rc.restriction.arrangement)).first;
          const ChamberComplex &ch = it->second;
          auto inv = inverse(rc.roots);
          REQUIRE(inv);
          Covector p(inv->size(), q(0));
          for (std::size_t r = 0; r < inv->size(); ++r)
            for (std::size_t c = 0; c < inv->size(); ++c) p[r] += (*inv)[r][c];
          auto kh = ch.find(sign_vector(ch.arrangement(), p));
          REQUIRE(kh);
          Frame fh = make_frame(ch, *kh, rc.roots);
          CHECK(coxeter_graph(ch, fh) == rc.graph);

          SimpleGraph contracted = contract_edge(g, x, y);
          for (auto [u, w] : contracted.edges) CHECK(rc.graph.has_edge(u, w));
          auto image = [&](std::size_t v) { return v - (v > y); };
          for (std::size_t z = 0; z < g.vertices; ++z) {
            if (z == x || z == y || !g.has_edge(x, z)) continue;
            std::size_t mh = rc.graph.label(image(x), image(z));
            CHECK(mh >= g.label(x, z));
            if (g.has_edge(y, z)) CHECK(mh + 2 >= g.label(x, z) + g.label(y, z));
          }
          ++checked;
        }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("Cartan types") {
  for (std::size_t l = 2; l <= 6; ++l) {
    CHECK(classify_cartan_type(cartan_template(CartanType::A, l)) == CartanType::A);
    CHECK(classify_cartan_type(cartan_template(CartanType::C, l)) == CartanType::C);
  }
  for (std::size_t l = 4; l <= 6; ++l) {
    CHECK(classify_cartan_type(cartan_template(CartanType::D, l)) == CartanType::D);
    CHECK(classify_cartan_type(cartan_template(CartanType::Dprime, l)) == CartanType::Dprime);
  }
  CHECK(classify_cartan_type(cartan_template(CartanType::Dprime, 3)) == CartanType::Dprime);
  // permuted copies keep their type; the transpose of C does not
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    std::size_t l = 4 + t % 3;
    std::vector<std::size_t> p(l);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    for (CartanType type : {CartanType::A, CartanType::C, CartanType::D, CartanType::Dprime}) {
      IntMatrix m = cartan_template(type, l), pm(l, std::vector<long long>(l));
      for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) pm[p[i]][p[j]] = m[i][j];
      CHECK(classify_cartan_type(pm) == type);
    }
  }
  IntMatrix b3 = cartan_template(CartanType::C, 3), bt = b3;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) bt[i][j] = b3[j][i];
  CHECK(classify_cartan_type(bt) == CartanType::Other);

  ChamberComplex bool3(gen::boolean(3));
  auto cm = cartan_matrix(bool3, canonical_frame(bool3, 0));
  REQUIRE(cm);
  CHECK(cm->entries == IntMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  CHECK(cm->type == CartanType::Other);

  ChamberComplex a10(gen::A_2n_1(5));
  bool absent = false;
  for (std::size_t k = 0; k < a10.size(); ++k) absent |= !cartan_matrix(a10, canonical_frame(a10, k));
  CHECK(absent);
}

TEST_CASE("root system closure") {
  ChamberComplex a3(gen::braid_A(3));
  ClosureResult r = root_system_closure(a3, canonical_frame(a3, 0));
  REQUIRE(r.system);
  CHECK(r.system->roots.size() == 12);
  CHECK(is_reduced(a3, *r.system));
  CHECK(in_integer_span(*r.system));
  CHECK(r.system->frames.size() == a3.size());

  // halving one simple root of A(A_3) gives no crystallographic root system
  Frame f = canonical_frame(a3, 0);
  f.roots[0] = scaled(f.roots[0], q(1, 2));
  ClosureResult half = root_system_closure(a3, f);
  CHECK_FALSE((half.system && is_reduced(a3, *half.system) && in_integer_span(*half.system)));

  // a non-crystallographic pentagonal instance
  ChamberComplex a10(gen::A_2n_1(5));
  for (std::size_t k = 0; k < a10.size(); k += 6) {
    ClosureResult c = root_system_closure(a10, canonical_frame(a10, k));
    CHECK((!c.system || !in_integer_span(*c.system) || !is_reduced(a10, *c.system)));
    if (c.conflict) CHECK(c.conflict->first < a10.size());
  }
}

TEST_CASE("crystallographic arrangements") {
  auto check_witness = [](const Arrangement &a, bool table_types) {
    ChamberComplex cc(a);
    auto w = is_crystallographic(cc);
    REQUIRE_MESSAGE(w, write_arrangement(a));
    CHECK(is_reduced(cc, w->system));
    CHECK(in_integer_span(w->system));
    CHECK(w->system.roots.size() == 2 * a.size());
    REQUIRE(w->cartan.size() == cc.size());
    if (table_types)
      for (const auto &c : w->cartan) CHECK(c.type != CartanType::Other);
    return w;
  };
  check_witness(gen::braid_A(3), true);
  auto c4 = check_witness(gen::refl_C(4), true);
  for (const auto &c : c4->cartan) CHECK(c.type == CartanType::C);
  for (std::size_t l = 2; l <= 4; ++l)
    for (std::size_t k = 0; k <= l; ++k) check_witness(gen::A_lk(l, k), l >= 3 || k > 0);
  auto a9 = check_witness(gen::A_4n1_1(2), true);
  bool minus_two = false;
  for (const auto &c : a9->cartan)
    for (const auto &row : c.entries)
      for (auto x : row) minus_two |= x == -2;
  CHECK(minus_two);
  check_witness(gen::A_2n_1(3), true);
  check_witness(gen::A_2n_1(4), false);

  // a pencil of five lines forces c_ij c_ji = 4cos^2(pi/5), which no
  // rescaling makes an integer
  ChamberComplex a10(gen::A_2n_1(5));
  CHECK(rank2_multiset(a10.lattice()).count(5));
  bool irrational = false;
  for (std::size_t k = 0; k < a10.size(); ++k) {
    Matrix c = c_coefficients(a10, canonical_frame(a10, k));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) irrational |= !(c[i][j] * c[j][i]).is_rational();
  }
  CHECK(irrational);
  CHECK_FALSE(is_crystallographic(a10));
}

TEST_CASE("galleries agree with the closure") {
  ChamberComplex cc(gen::A_2n_1(4));
  auto w = is_crystallographic(cc);
  REQUIRE(w);
  std::mt19937 rng(4);
  for (int t = 0; t < 60; ++t) {
    std::vector<std::size_t> walk;
    for (int s = 0; s < 1 + t % 25; ++s) walk.push_back(rng() % 3);
    Frame g = gallery_basis(cc, w->start, walk);
    const auto &expected = w->system.frames[g.chamber].roots;
    for (const auto &r : g.roots) CHECK(std::find(expected.begin(), expected.end(), r) != expected.end());
  }
}

TEST_CASE("graph change diagrams") {
  auto a61 = graph_change_diagram(ChamberComplex(gen::A_2n_1(3)));
  CHECK(a61.classes.size() == 1);
  CHECK(equivalent(a61, drawn_A61()));
  auto a91 = graph_change_diagram(ChamberComplex(gen::A_4n1_1(2)));
  CHECK(a91.classes.size() == 1);
  CHECK(equivalent(a91, drawn_A91()));
  CHECK_FALSE(equivalent(a91, drawn_A61()));
  ChamberComplex cc81(gen::A_2n_1(4));
  auto a81 = graph_change_diagram(cc81);
  CHECK(a81.deterministic);
  CHECK(a81.classes.size() == 5);
  CHECK(equivalent(a81, drawn_A81()));
  // the same diagram from every starting chamber
  for (std::size_t k = 0; k < cc81.size(); k += 7) CHECK(equivalent(graph_change_diagram(cc81, canonical_frame(cc81, k)), a81));
  // a wrong arrow is detected
  auto broken = drawn_A81();
  std::swap(broken.next[0][0], broken.next[0][1]);
  CHECK_FALSE(equivalent(a81, broken));
}

TEST_CASE("rank-2 flats of small reflection arrangements have at most four lines") {
  for (std::size_t l = 4; l <= 5; ++l)
    for (const auto &a : {gen::braid_A(l), gen::refl_C(l), gen::A_lk(l, l - 1)}) {
      auto m = rank2_multiset(IntersectionLattice(a));
      CHECK(m.rbegin()->first <= 4);
    }
}
