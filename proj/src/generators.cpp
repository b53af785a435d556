#include <map>
#include <sstream>

#include "arrango/arrangement.hpp"

namespace arrango::gen {

namespace {

Covector unit(std::size_t l, std::size_t i) {
  Covector v(l, Scalar(0));
  v[i] = Scalar(1);
  return v;
}

Covector pair_form(std::size_t l, std::size_t i, std::size_t j, int s) {
  Covector v(l, Scalar(0));
  v[i] = Scalar(1);
  v[j] = Scalar(s);
  return v;
}

void require(bool ok, const std::string &msg) {
  if (!ok) throw ArrangementError(msg);
}

}  // namespace

Arrangement boolean(std::size_t l) {
  std::vector<Covector> cols;
  for (std::size_t i = 0; i < l; ++i) cols.push_back(unit(l, i));
  return Arrangement::from_matrix(l, cols);
}

Arrangement braid_A(std::size_t l) {
  require(l >= 1, "braid_A needs l >= 1");
  std::vector<Covector> cols;
  for (std::size_t i = 0; i < l; ++i) cols.push_back(unit(l, i));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) cols.push_back(pair_form(l, i, j, -1));
  return Arrangement::from_matrix(l, cols);
}

Arrangement A_lk(std::size_t l, std::size_t k) {
  require(k <= l, "A_lk needs 0 <= k <= l");
  std::vector<Covector> cols;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) {
      cols.push_back(pair_form(l, i, j, -1));
      cols.push_back(pair_form(l, i, j, 1));
    }
  for (std::size_t i = 0; i < k; ++i) cols.push_back(unit(l, i));
  return Arrangement::from_matrix(l, cols);
}

Arrangement refl_C(std::size_t l) {
  require(l >= 1, "refl_C needs l >= 1");
  return A_lk(l, l);
}

Arrangement refl_D(std::size_t l) {
  require(l >= 2, "refl_D needs l >= 2");
  return A_lk(l, 0);
}

Arrangement A_2n_1(std::size_t n) {
  require(n >= 3, "A(2n,1) needs n >= 3");
  auto m = static_cast<unsigned>(2 * n);
  std::vector<Covector> cols;
  for (std::size_t j = 0; j < n; ++j) {
    auto k = static_cast<long>(j);
    cols.push_back({-sin_frac(k, m), cos_frac(k, m), Scalar(0)});
  }
  for (std::size_t j = 1; j <= n; ++j) {
    auto k = static_cast<long>(2 * j - 1);
    cols.push_back({cos_frac(k, m), sin_frac(k, m), Scalar(1)});
  }
  return Arrangement::from_matrix(3, cols);
}

Arrangement A_4n1_1(std::size_t n) {
  require(n >= 2, "A(4n+1,1) needs n >= 2");
  Arrangement base = A_2n_1(2 * n);
  std::vector<Covector> cols = base.normals();
  cols.push_back({Scalar(0), Scalar(0), Scalar(1)});
  return Arrangement::from_matrix(3, cols, nullptr, base.field().order);
}

Arrangement g314_sub() {
  Scalar z = Scalar::zeta(1, 3);
  Scalar z2 = z * z;
  Scalar o(0), e(1), m(-1);
  const std::vector<Covector> rows = {
      {o, e, e, e, e, e, e, e, e, e, o, o, o, o, o, o, o, o},
      {o, -z, -z2, m, o, o, o, o, o, o, e, e, e, e, e, e, o, o},
      {o, o, o, o, -z, -z2, m, o, o, o, -z, -z2, m, o, o, o, e, e},
      {e, o, o, o, o, o, o, -z, -z2, m, o, o, o, -z, -z2, m, -z, -z2},
  };
  std::vector<Covector> cols(18, Covector(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 18; ++j) cols[j][i] = rows[i][j];
  return Arrangement::from_matrix(4, cols, nullptr, 3);
}

Arrangement g314_C() {
  Arrangement a = g314_sub();
  return quotient_mapped(a, make_flat(a, {0, 1, 2})).arrangement;
}

Arrangement g314_D() {
  Arrangement a = g314_sub();
  return restriction(a, make_flat(a, {7}));
}

Arrangement g314_A2() {
  Arrangement a = g314_sub();
  // the trace on H2 = (1,-zeta,0,0)^perp; H5 gives 11 lines with s = 2
  return restriction(a, make_flat(a, {1}));
}

Arrangement generic(std::size_t l, std::size_t n) {
  require(l >= 1, "generic needs l >= 1");
  std::vector<Covector> cols;
  for (std::size_t t = 1; t <= n; ++t) {
    Covector v(l);
    Rational p(1);
    for (std::size_t i = 0; i < l; ++i) {
      v[i] = Scalar(p);
      p *= static_cast<long>(t);
    }
    cols.push_back(std::move(v));
  }
  return Arrangement::from_matrix(l, cols);
}

namespace {

std::vector<std::size_t> parse_params(const std::string &spec, std::string &name) {
  std::vector<std::size_t> params;
  std::stringstream ss(spec);
  std::string item;
  bool first = true;
  while (std::getline(ss, item, ':')) {
    if (first) {
      name = item;
      first = false;
      continue;
    }
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != item.size() || item.empty())
      throw ArrangementError("bad parameter '" + item + "' in '" + spec + "'");
    params.push_back(v);
  }
  return params;
}

}  // namespace

Arrangement by_name(const std::string &spec) {
  std::string name;
  std::vector<std::size_t> p;
  // A(m,1) shorthand for the rank-3 series
  if (spec.size() > 4 && spec.rfind("A(", 0) == 0 && spec.substr(spec.size() - 3) == ",1)") {
    std::size_t m = std::stoul(spec.substr(2, spec.size() - 5));
    if (m % 2 == 0) return A_2n_1(m / 2);
    if (m % 4 == 1) return A_4n1_1((m - 1) / 4);
    throw ArrangementError("no arrangement " + spec + " in the catalog");
  }
  p = parse_params(spec, name);
  auto arity = [&](std::size_t k) {
    if (p.size() != k)
      throw ArrangementError("'" + name + "' takes " + std::to_string(k) + " parameter(s)");
  };
  if (name == "boolean") {
    arity(1);
    return boolean(p[0]);
  }
  if (name == "braidA") {
    arity(1);
    return braid_A(p[0]);
  }
  if (name == "reflC") {
    arity(1);
    return refl_C(p[0]);
  }
  if (name == "reflD") {
    arity(1);
    return refl_D(p[0]);
  }
  if (name == "Alk") {
    arity(2);
    return A_lk(p[0], p[1]);
  }
  if (name == "A2n1") {
    arity(1);
    return A_2n_1(p[0]);
  }
  if (name == "A4n11") {
    arity(1);
    return A_4n1_1(p[0]);
  }
  if (name == "generic") {
    arity(2);
    return generic(p[0], p[1]);
  }
  if (name == "g314") {
    arity(0);
    return g314_sub();
  }
  if (name == "g314-C") {
    arity(0);
    return g314_C();
  }
  if (name == "g314-D") {
    arity(0);
    return g314_D();
  }
  if (name == "g314-A2") {
    arity(0);
    return g314_A2();
  }
  throw ArrangementError("unknown catalog name '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"boolean:L",  "braidA:L", "reflC:L", "reflD:L", "Alk:L:K", "A2n1:N",  "A4n11:N",
          "generic:L:N", "g314",     "g314-C",  "g314-D",  "g314-A2", "A(M,1)"};
}

}  // namespace arrango::gen
