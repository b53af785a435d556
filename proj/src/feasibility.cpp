#include <map>

#include "arrango/chambers.hpp"

namespace arrango {

namespace {

struct Row {
  Covector g;
  bool strict;
};

std::string key(const Covector &v) {
  std::string k;
  for (const auto &x : v) k += x.to_string() + ";";
  return k;
}

// Positive rescaling and dedup; returns false on a violated constant row.
bool tidy(std::vector<Row> &rows) {
  std::map<std::string, std::size_t> seen;
  std::vector<Row> out;
  for (auto &r : rows) {
    if (normalize_signed(r.g) == 0) {
      if (r.strict) return false;
      continue;
    }
    auto [it, fresh] = seen.try_emplace(key(r.g), out.size());
    if (fresh)
      out.push_back(std::move(r));
    else
      out[it->second].strict = out[it->second].strict || r.strict;
  }
  rows = std::move(out);
  return true;
}

}  // namespace

bool feasible(std::size_t dim, std::vector<Covector> strict, std::vector<Covector> weak, std::vector<Covector> equal) {
  std::vector<Row> rows;
  for (auto &s : strict) rows.push_back({std::move(s), true});
  for (auto &w : weak) rows.push_back({std::move(w), false});
  // substitute the equalities away
  for (std::size_t e = 0; e < equal.size(); ++e) {
    const Covector &eq = equal[e];
    std::size_t k = 0;
    while (k < dim && eq[k].is_zero()) ++k;
    if (k == dim) continue;
    auto eliminate = [&](Covector &g) {
      if (!g[k].is_zero()) g = add_scaled(g, -(g[k] / eq[k]), eq);
    };
    for (auto &r : rows) eliminate(r.g);
    for (std::size_t e2 = e + 1; e2 < equal.size(); ++e2) eliminate(equal[e2]);
  }
  if (!tidy(rows)) return false;
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<Row> pos, neg, next;
    for (auto &r : rows) {
      int s = r.g[k].sign();
      (s > 0 ? pos : (s < 0 ? neg : next)).push_back(std::move(r));
    }
    // c_p g_n - c_n g_p cancels x_k with positive multipliers
    for (const auto &p : pos)
      for (const auto &n : neg) {
        Covector g = add_scaled(scaled(n.g, p.g[k]), -n.g[k], p.g);
        g[k] = Scalar(0);
        next.push_back({std::move(g), p.strict || n.strict});
      }
    rows = std::move(next);
    if (!tidy(rows)) return false;
  }
  return true;
}

bool cell_feasible(const Arrangement &a, const SignVector &s) {
  std::vector<Covector> strict, equal;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (s[i] == '0')
      equal.push_back(a.normal(i));
    else
      strict.push_back(scaled(a.normal(i), Scalar(s[i] == '+' ? 1 : -1)));
  }
  return feasible(a.dim(), std::move(strict), {}, std::move(equal));
}

bool is_wall_by_feasibility(const Arrangement &a, const SignVector &s, std::size_t h) {
  SignVector t = s;
  t[h] = '0';
  return cell_feasible(a, t);
}

}  // namespace arrango
