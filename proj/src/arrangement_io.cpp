#include <cctype>
#include <fstream>
#include <sstream>

#include "arrango/arrangement.hpp"

namespace arrango {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

// Splits a row at whitespace outside parentheses.
std::vector<Token> split_row(const std::string &line) {
  std::vector<Token> out;
  int depth = 0;
  std::size_t start = std::string::npos;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    char c = i < line.size() ? line[i] : ' ';
    bool space = std::isspace(static_cast<unsigned char>(c)) || c == ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (space && depth <= 0) {
      if (start != std::string::npos) {
        out.push_back({line.substr(start, i - start), start + 1});
        start = std::string::npos;
      }
    } else if (start == std::string::npos) {
      start = i;
    }
  }
  return out;
}

std::vector<std::string> words(const std::string &line) {
  std::istringstream ss(line);
  std::vector<std::string> w;
  std::string s;
  while (ss >> s) w.push_back(s);
  return w;
}

std::size_t first_column(const std::string &line) {
  std::size_t i = 0;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  return i + 1;
}

}  // namespace

Arrangement parse_arrangement(const std::string &text, std::vector<std::string> *warnings) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  std::optional<std::size_t> dim;
  std::optional<unsigned> order;
  std::vector<Covector> columns;
  std::vector<std::size_t> column_line;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto w = words(line);
    if (w.empty()) continue;
    std::size_t col = first_column(line);
    if (!dim) {
      if (w[0] != "dim" || w.size() != 2) throw ParseError("expected 'dim <l>'", lineno, col);
      try {
        std::size_t used = 0;
        unsigned long v = std::stoul(w[1], &used);
        if (used != w[1].size() || v > 64) throw std::invalid_argument("dim");
        dim = v;
      } catch (const std::exception &) {
        throw ParseError("bad dimension '" + w[1] + "'", lineno, line.find(w[1]) + 1);
      }
      continue;
    }
    if (!order && columns.empty() && w[0] == "field") {
      if (w.size() == 2 && w[1] == "QQ") {
        order = 1;
      } else if (w.size() == 3 && w[1] == "cyclo") {
        try {
          std::size_t used = 0;
          unsigned long v = std::stoul(w[2], &used);
          if (used != w[2].size() || v == 0 || v > 100000) throw std::invalid_argument("order");
          order = static_cast<unsigned>(v);
        } catch (const std::exception &) {
          throw ParseError("bad cyclotomic order '" + w[2] + "'", lineno, line.find(w[2]) + 1);
        }
      } else {
        throw ParseError("expected 'field QQ' or 'field cyclo <N>'", lineno, col);
      }
      continue;
    }
    auto tokens = split_row(line);
    if (tokens.size() != *dim)
      throw ParseError("expected " + std::to_string(*dim) + " entries, found " + std::to_string(tokens.size()),
                       lineno, col);
    Covector v;
    for (const auto &t : tokens) {
      Scalar x = parse_scalar(t.text, lineno, t.column);
      // without a field line the smallest field holding every entry is used
      if (!order) {
        v.push_back(std::move(x));
        continue;
      }
      unsigned l = lcm_order(x.order(), *order);
      auto in_field = x.embed(l).descend(*order);
      if (!in_field)
        throw ParseError("'" + t.text + "' does not lie in the declared field " + Field{*order, true}.tag(),
                         lineno, t.column);
      v.push_back(*in_field);
    }
    if (is_zero(v)) throw ParseError("zero normal", lineno, col);
    columns.push_back(std::move(v));
    column_line.push_back(lineno);
  }
  if (!dim) throw ParseError("missing 'dim' header", lineno + 1, 1);
  Derived d = from_matrix_mapped(*dim, columns, order.value_or(1));
  if (warnings) {
    std::vector<std::optional<std::size_t>> first(d.arrangement.size());
    for (std::size_t j = 0; j < d.image.size(); ++j) {
      std::size_t t = *d.image[j];
      if (!first[t])
        first[t] = column_line[j];
      else
        warnings->push_back("line " + std::to_string(column_line[j]) + ": normal proportional to line " +
                            std::to_string(*first[t]) + "; dropped");
    }
  }
  return std::move(d.arrangement);
}

Arrangement read_arrangement_file(const std::string &path, std::vector<std::string> *warnings) {
  std::ifstream f(path);
  if (!f) throw ArrangementError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_arrangement(ss.str(), warnings);
}

std::string write_arrangement(const Arrangement &a) {
  std::string out = "dim " + std::to_string(a.dim()) + "\n";
  out += "field " + a.field().tag() + "\n";
  for (const auto &v : a.normals()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ' ';
      out += v[i].to_string();
    }
    out += '\n';
  }
  return out;
}

}  // namespace arrango
