#include <algorithm>
#include <random>

#include "arrango/lattice.hpp"
#include "doctest.h"

using namespace arrango;

namespace {

Scalar q(long p, long d = 1) { return Scalar(Rational(p, d)); }

Covector vec(std::initializer_list<long> xs) {
  Covector v;
  for (long x : xs) v.push_back(q(x));
  return v;
}

Arrangement random_arrangement(std::mt19937 &rng, std::size_t l, std::size_t n, long range = 2) {
  std::uniform_int_distribution<long> c(-range, range);
  std::vector<Covector> cols;
  while (cols.size() < n) {
    Covector v(l);
    for (auto &x : v) x = q(c(rng));
    if (!is_zero(v)) cols.push_back(v);
  }
  return Arrangement::from_matrix(l, cols);
}

// Whitney's formula: chi(t) = sum over subsets S of (-1)^|S| t^(l - rank S).
CharPoly whitney(const Arrangement &a) {
  const std::size_t n = a.size(), l = a.dim();
  CharPoly p;
  p.coefficients.assign(l + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Matrix rows;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) rows.push_back(a.normal(i));
    std::size_t r = rank_of(rows, l);
    p.coefficients[l - r] += (std::popcount(mask) % 2 ? -1 : 1);
  }
  return p;
}

// Reducible iff the normals split into two nonempty parts with additive rank.
bool irreducible_by_splits(const Arrangement &a) {
  const std::size_t n = a.size();
  if (n == 0) return false;
  std::size_t total = a.rank();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    Matrix s, t;
    for (std::size_t i = 0; i < n; ++i) (((mask << 1) >> i) & 1 ? s : t).push_back(a.normal(i));
    // part t always holds hyperplane 0
    if (rank_of(s, a.dim()) + rank_of(t, a.dim()) == total) return false;
  }
  return true;
}

// Depth-first search for a maximal chain of modular elements, using only the
// subspace-sum definition.
bool supersolvable_by_sums(const IntersectionLattice &l) {
  std::vector<bool> modular(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) modular[x] = is_modular_by_sum(l, x);
  std::vector<std::size_t> frontier = {0};
  for (std::size_t q = 1; q <= l.rank(); ++q) {
    std::vector<std::size_t> next;
    for (std::size_t y : l.level(q)) {
      if (!modular[y]) continue;
      for (std::size_t x : frontier)
        if (l.leq(x, y)) {
          next.push_back(y);
          break;
        }
    }
    frontier = next;
  }
  return !frontier.empty();
}

// Defining matrices as printed, one column per hyperplane; the generators
// build the same arrangements by restriction.
Arrangement printed_D() {
  Scalar z = Scalar::zeta(1, 3), o(0), e(1), m(-1);
  std::vector<Covector> rows = {{e, z, e, o, o, o, o, m, z, e}, {o, o, o, e, z, e, o, z, m, m},
                                {o, e, m, o, e, m, e, e, e, o}};
  std::vector<Covector> cols(10, Covector(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 10; ++j) cols[j][i] = rows[i][j];
  return Arrangement::from_matrix(3, cols);
}

Arrangement printed_A2() {
  Scalar z = Scalar::zeta(1, 3), o(0), e(1), m(-1);
  Scalar w = (e - z) / Scalar(3);
  std::vector<Covector> rows = {{e, o, w, w, w, w, w, w, o, o}, {o, o, e, z, z * z, o, o, o, z, e},
                                {o, e, o, o, o, -z, -z * z, m, e, e}};
  std::vector<Covector> cols(10, Covector(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 10; ++j) cols[j][i] = rows[i][j];
  return Arrangement::from_matrix(3, cols);
}

}  // namespace

TEST_CASE("characteristic polynomial helpers") {
  CharPoly p = poly_from_roots({1, 3, 5});
  CHECK(p.coefficients == std::vector<long long>{-15, 23, -9, 1});
  CHECK(p(-1) == -48);
  CHECK(p.to_string() == "t^3 - 9t^2 + 23t - 15");
  CHECK(*p.integer_roots() == std::vector<long long>{1, 3, 5});
  CHECK(*poly_from_roots({2, 2}, 1).integer_roots() == std::vector<long long>{0, 2, 2});
  CHECK_FALSE(CharPoly{{1, 0, 1}, {}}.integer_roots().has_value());
  CHECK(multiply(poly_from_roots({1}), poly_from_roots({4, 5})) == poly_from_roots({1, 4, 5}));
}

TEST_CASE("boolean lattices") {
  for (std::size_t l = 1; l <= 5; ++l) {
    IntersectionLattice L(gen::boolean(l));
    CHECK(L.rank() == l);
    CHECK(L.size() == (std::size_t{1} << l));
    CHECK(L.mobius(L.top()) == (l % 2 ? -1 : 1));
    CHECK(L.char_poly() == poly_from_roots(std::vector<long long>(l, 1)));
    auto cert = supersolvable_certificate(L);
    REQUIRE(cert);
    CHECK(cert->exponents == std::vector<long long>(l, 1));
  }
  IntersectionLattice b3(gen::boolean(3));
  CHECK(b3.level(2).size() == 3);
  CHECK(b3.level(3).size() == 1);
  CHECK(b3.mobius(0) == 1);
  for (std::size_t h = 0; h < 3; ++h) CHECK(b3.mobius(b3.atom(h)) == -1);
}

TEST_CASE("characteristic polynomial agrees with Whitney's formula") {
  std::mt19937 rng(1);
  for (int t = 0; t < 40; ++t) {
    std::size_t l = 2 + t % 3;
    auto a = random_arrangement(rng, l, 4 + t % 6);
    IntersectionLattice L(a);
    CHECK(L.char_poly() == whitney(a));
    CHECK(L.char_poly().coefficients.back() == 1);
    CHECK(L.char_poly().mu_by_rank[1] == -static_cast<long long>(a.size()));
  }
  CHECK(char_poly(gen::g314_C()) == whitney(gen::g314_C()));
}

TEST_CASE("deletion-restriction") {
  std::mt19937 rng(2);
  for (int t = 0; t < 30; ++t) {
    auto a = random_arrangement(rng, 3, 5 + t % 4);
    std::size_t h = static_cast<std::size_t>(t) % a.size();
    CharPoly whole = char_poly(a), del = char_poly(deletion(a, h));
    CharPoly res = char_poly(restriction(a, make_flat(a, {h})));
    for (long long x = -3; x <= 3; ++x) CHECK(whole(x) == del(x) - res(x));
    // restriction polynomial through the interval [H, T]
    IntersectionLattice L(a);
    CHECK(L.char_poly_restriction(L.atom(h)) == res);
  }
}

TEST_CASE("products multiply characteristic polynomials") {
  std::mt19937 rng(4);
  for (int t = 0; t < 15; ++t) {
    auto a1 = random_arrangement(rng, 2, 3), a2 = random_arrangement(rng, 3, 4);
    CHECK(char_poly(product(a1, a2)) == multiply(char_poly(a1), char_poly(a2)));
  }
}

TEST_CASE("s-values and polynomials of the G(3,1,4) examples") {
  CHECK(s_value(gen::g314_sub()) == 0);
  CHECK(s_value(gen::g314_C()) == 4);
  CHECK(s_value(gen::g314_D()) == 4);
  CHECK(s_value(gen::g314_A2()) == -4);
  CHECK(s_value(product(gen::g314_D(), gen::g314_A2())) == 0);
  CHECK(char_poly(gen::g314_D()) == poly_from_roots({1, 4, 5}));
  CHECK(char_poly(gen::g314_A2()) == poly_from_roots({1, 4, 5}));
  CHECK(char_poly(gen::A_4n1_1(2)) == poly_from_roots({1, 3, 5}));
  // the derived arrangements match the explicit matrices up to L-equivalence
  CHECK(lattice_isomorphism(IntersectionLattice(gen::g314_D()), IntersectionLattice(printed_D())).has_value());
  CHECK(lattice_isomorphism(IntersectionLattice(gen::g314_A2()), IntersectionLattice(printed_A2())).has_value());
  CHECK(s_value(printed_A2()) == -4);
  CHECK(s_value(printed_D()) == 4);
  // empty arrangement convention
  CHECK(s_value(Arrangement(3)) == 3);
  CHECK(char_poly(Arrangement(3)) == poly_from_roots({}, 3));
}

TEST_CASE("simpliciality criterion in rank 3") {
  CHECK(is_simplicial_rank3(IntersectionLattice(gen::A_2n_1(3))));
  CHECK_FALSE(is_simplicial_rank3(IntersectionLattice(gen::generic(3, 4))));
  CHECK_FALSE(is_simplicial_rank3(IntersectionLattice(gen::g314_C())));
  CHECK(is_simplicial_rank3(IntersectionLattice(gen::A_4n1_1(2))));
  CHECK_THROWS_AS(is_simplicial_rank3(IntersectionLattice(gen::boolean(4))), LatticeError);
}

TEST_CASE("rank-2 multisets of the rank-3 series") {
  for (std::size_t n = 3; n <= 6; ++n) {
    IntersectionLattice L(gen::A_2n_1(n));
    auto m = rank2_multiset(L);
    std::size_t l2 = L.level(2).size();
    std::map<std::size_t, std::size_t> expect;
    expect[2] += n;
    expect[3] += l2 - n - 1;
    expect[n] += 1;
    CHECK(m == expect);
  }
  for (std::size_t n = 2; n <= 3; ++n) {
    IntersectionLattice L(gen::A_4n1_1(n));
    auto m = rank2_multiset(L);
    std::size_t l2 = L.level(2).size();
    std::map<std::size_t, std::size_t> expect;
    expect[2] += 3 * n;
    expect[3] += l2 - 4 * n - 1;
    expect[4] += n;
    expect[2 * n] += 1;
    CHECK(m == expect);
  }
}

TEST_CASE("modularity: rank identity agrees with subspace sums") {
  std::mt19937 rng(6);
  for (int t = 0; t < 12; ++t) {
    auto a = random_arrangement(rng, 3 + t % 2, 5 + t % 3, 1);
    IntersectionLattice L(a);
    for (std::size_t x = 0; x < L.size(); ++x) CHECK(is_modular(L, x) == is_modular_by_sum(L, x));
  }
  IntersectionLattice L(gen::A_2n_1(4));
  CHECK(is_modular(L, 0));
  CHECK(is_modular(L, L.top()));
  for (std::size_t h = 0; h < 8; ++h) CHECK(is_modular(L, L.atom(h)));
}

TEST_CASE("supersolvability") {
  for (std::size_t n = 3; n <= 6; ++n) {
    IntersectionLattice L(gen::A_2n_1(n));
    auto cert = supersolvable_certificate(L);
    REQUIRE(cert);
    auto e = cert->exponents;
    std::sort(e.begin(), e.end());
    CHECK(e == std::vector<long long>{1, static_cast<long long>(n) - 1, static_cast<long long>(n)});
    // the pencil of the first n normals is modular
    IndexSet pencil(2 * n);
    for (std::size_t i = 0; i < n; ++i) pencil.insert(i);
    auto x = L.find(pencil);
    REQUIRE(x);
    CHECK(is_modular(L, *x));
  }
  CHECK_FALSE(is_supersolvable(gen::refl_D(4)).has_value());
  CHECK_FALSE(supersolvable_by_sums(IntersectionLattice(gen::refl_D(4))));
  CHECK(is_supersolvable(gen::braid_A(4)).has_value());
  CHECK(is_supersolvable(gen::refl_C(4)).has_value());

  std::mt19937 rng(7);
  for (int t = 0; t < 25; ++t) {
    auto a = random_arrangement(rng, 3, 4 + t % 4, 1);
    IntersectionLattice L(a);
    auto cert = supersolvable_certificate(L);
    CHECK(cert.has_value() == supersolvable_by_sums(L));
    if (!cert) continue;
    for (auto x : cert->chain) CHECK(is_modular(L, x));
    long long total = 0;
    for (auto b : cert->exponents) total += b;
    CHECK(total == static_cast<long long>(a.size()));
    CHECK(L.char_poly() == poly_from_roots(cert->exponents, a.dim() - L.rank()));
  }
}

TEST_CASE("supersolvability under restriction and products") {
  for (const auto &a : {gen::A_2n_1(4), gen::A_4n1_1(2), gen::refl_C(4), gen::braid_A(4)}) {
    REQUIRE(is_supersolvable(a));
    for (std::size_t h = 0; h < a.size(); ++h) CHECK(is_supersolvable(restriction(a, make_flat(a, {h}))));
  }
  const std::vector<Arrangement> pool = {gen::boolean(2), gen::braid_A(2), gen::A_2n_1(3), gen::refl_D(4),
                                         gen::generic(3, 5)};
  for (const auto &a1 : pool)
    for (const auto &a2 : pool) {
      if (a1.dim() + a2.dim() > 6) continue;
      bool both = is_supersolvable(a1) && is_supersolvable(a2);
      CHECK(is_supersolvable(product(a1, a2)).has_value() == both);
    }
}

TEST_CASE("irreducibility") {
  auto a2 = gen::braid_A(2);
  auto d = decompose(product(a2, a2));
  CHECK_FALSE(d.irreducible);
  REQUIRE(d.blocks.size() == 2);
  CHECK(d.blocks[0].items() == std::vector<std::size_t>{0, 1, 2});
  CHECK(is_irreducible(a2));
  CHECK(is_irreducible(gen::A_2n_1(5)));
  CHECK_FALSE(is_irreducible(Arrangement(2)));
  CHECK_FALSE(is_irreducible(gen::boolean(3)));
  CHECK(is_irreducible(gen::boolean(1)));
  std::mt19937 rng(9);
  for (int t = 0; t < 40; ++t) {
    Arrangement a = random_arrangement(rng, 2 + t % 3, 3 + t % 5, 1);
    if (t % 4 == 0) a = product(a, random_arrangement(rng, 2, 2, 1));
    if (a.size() > 12) continue;
    CHECK(is_irreducible(a) == irreducible_by_splits(a));
  }
}

TEST_CASE("lattice isomorphism") {
  auto iso = [](const Arrangement &a, const Arrangement &b) {
    return lattice_isomorphism(IntersectionLattice(a), IntersectionLattice(b)).has_value();
  };
  CHECK(iso(gen::A_2n_1(3), gen::braid_A(3)));
  CHECK(iso(gen::A_4n1_1(2), gen::refl_C(3)));
  CHECK_FALSE(iso(gen::A_2n_1(4), gen::A_4n1_1(2)));
  CHECK_FALSE(iso(gen::generic(3, 6), gen::A_2n_1(3)));

  // a relabeled and rescaled copy is found, and the witness maps flats to flats
  std::mt19937 rng(10);
  for (int t = 0; t < 10; ++t) {
    auto a = random_arrangement(rng, 3, 7, 2);
    std::vector<std::size_t> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Covector> cols;
    for (auto i : perm) cols.push_back(scaled(a.normal(i), q(-2)));
    auto b = Arrangement::from_matrix(3, cols);
    IntersectionLattice la(a), lb(b);
    auto f = lattice_isomorphism(la, lb);
    REQUIRE(f);
    for (std::size_t x = 0; x < la.size(); ++x) {
      IndexSet s(a.size());
      for (auto i : la.set(x).items()) s.insert((*f)[i]);
      CHECK(lb.find(s).has_value());
    }
  }
}

TEST_CASE("Hansen-Motzkin witnesses") {
  for (const auto &a : {gen::boolean(3), gen::braid_A(4), gen::A_4n1_1(2), gen::A_2n_1(5), gen::refl_C(4),
                        gen::generic(3, 5)}) {
    IntersectionLattice L(a);
    auto w = hansen_motzkin_witness(L);
    const std::size_t l = a.dim();
    CHECK(L.rank_of(w.x) == l - 1);
    CHECK(L.rank_of(w.y) == l - 2);
    CHECK(L.leq(w.y, w.x));
    IndexSet expect = L.set(w.y);
    expect.insert(w.hyperplane);
    CHECK(L.set(w.x) == expect);
    CHECK(L.join(w.y, L.atom(w.hyperplane)) == w.x);
  }
  // braid_A(4): some rank-3 flat has a reducible localization
  IntersectionLattice L(gen::braid_A(4));
  bool found = false;
  for (auto x : L.level(3)) found |= !is_irreducible(localization(L.arrangement(), L.set(x)));
  CHECK(found);
  CHECK_THROWS_AS(hansen_motzkin_witness(IntersectionLattice(gen::g314_sub())), LatticeError);
  CHECK_THROWS_AS(hansen_motzkin_witness(IntersectionLattice(gen::braid_A(2))), LatticeError);
}

TEST_CASE("intervals") {
  IntersectionLattice L(gen::A_2n_1(3));
  CHECK(interval(L, 0, 0).size() == 1);
  auto h = L.atom(0);
  auto vh = interval(L, 0, h);
  CHECK(vh.size() == 2);
  CHECK(vh.rank() == 1);
  for (auto x : L.level(2)) {
    if (L.set(x).count() != 3) continue;
    auto i = interval(L, 0, x);
    CHECK(i.rank() == 2);
    CHECK(i.level(1).size() == 3);
    break;
  }
  // [H, T] is the lattice of the restriction
  auto ht = interval(L, h, L.top());
  CHECK(ht.char_poly() == L.char_poly_restriction(h));
  CHECK_THROWS_AS(interval(L, L.atom(0), L.atom(1)), LatticeError);
}

TEST_CASE("rank-3 polynomial parity and modular complements") {
  std::vector<Arrangement> simplicial = {gen::A_2n_1(3), gen::A_2n_1(4), gen::A_2n_1(5), gen::A_4n1_1(2),
                                         gen::A_4n1_1(3), gen::refl_C(3), gen::braid_A(3)};
  for (const auto &a : simplicial) {
    IntersectionLattice L(a);
    REQUIRE(is_simplicial_rank3(L));
    auto roots = L.char_poly().integer_roots();
    REQUIRE(roots);
    REQUIRE(roots->size() == 3);
    long long r1 = (*roots)[1], r2 = (*roots)[2];
    if (a.size() % 2 == 0)
      CHECK((r1 % 2 == 0) != (r2 % 2 == 0));
    else
      CHECK((r1 % 2 == 1 && r2 % 2 == 1));
  }
  for (const auto &a : {gen::A_2n_1(4), gen::A_2n_1(5), gen::A_lk(3, 1), gen::A_lk(3, 2), gen::A_4n1_1(2)}) {
    IntersectionLattice L(a);
    for (auto x : L.level(a.dim() - 1)) {
      if (!is_modular(L, x)) continue;
      for (std::size_t h = 0; h < a.size(); ++h) {
        if (L.set(x).contains(h)) continue;
        CHECK(restriction(a, make_flat(a, {h})).size() == L.set(x).count());
      }
    }
  }
}
