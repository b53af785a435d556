#include "arrango/report.hpp"

namespace arrango {

std::string format_covector(const Covector &v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + ")";
}

std::string format_multiset(const std::map<std::size_t, std::size_t> &m) {
  std::string out = "{{";
  bool first = true;
  for (const auto &[k, n] : m) {
    out += (first ? "" : ", ") + std::to_string(k) + "^" + std::to_string(n);
    first = false;
  }
  return out + "}}";
}

namespace {

template <class M, class F>
std::string rows(const M &m, F cell) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m[i].size(); ++j) out += (j ? " " : "") + cell(m[i][j]);
  }
  return out + "]";
}

}  // namespace

std::string format_matrix(const IntMatrix &m) {
  return rows(m, [](long long x) { return std::to_string(x); });
}

std::string format_matrix(const Matrix &m) {
  return rows(m, [](const Scalar &x) { return x.to_string(); });
}

std::string format_set(const IndexSet &s) {
  std::string out = "{";
  bool first = true;
  for (auto i : s.items()) {
    out += (first ? "" : ", ") + std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace arrango
