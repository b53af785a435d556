#include <cctype>
#include <string>

#include "arrango/scalar.hpp"

namespace arrango {

ParseError::ParseError(const std::string &msg, std::size_t line_, std::size_t column_)
    : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " +
                         msg),
      line(line_),
      column(column_) {}

namespace {

constexpr unsigned kMaxOrder = 100000;

class Parser {
 public:
  Parser(const std::string &text, std::size_t line, std::size_t offset)
      : s_(text), line_(line), offset_(offset) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, line_, offset_ + pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Scalar d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  Scalar primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(Rational(integer()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name != "cos" && name != "sin" && name != "zeta") {
        pos_ = start;
        fail("unknown function '" + name + "'");
      }
      expect('(');
      long k = small_integer(true);
      expect(',');
      std::size_t at = pos_;
      long n = small_integer(false);
      if (n <= 0 || n > static_cast<long>(kMaxOrder)) {
        pos_ = at;
        fail("order must be between 1 and " + std::to_string(kMaxOrder));
      }
      expect(')');
      auto order = static_cast<unsigned>(n);
      if (name == "cos") return cos_frac(k, order);
      if (name == "sin") return sin_frac(k, order);
      return Scalar::zeta(k, order);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(s_.substr(start, pos_ - start));
  }

  long small_integer(bool allow_sign) {
    skip();
    bool neg = false;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    std::size_t at = pos_;
    Integer v = integer();
    if (v > 1000000000) {
      pos_ = at;
      fail("integer argument too large");
    }
    long r = v.convert_to<long>();
    return neg ? -r : r;
  }

  const std::string &s_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const std::string &text, std::size_t line, std::size_t column_offset) {
  return Parser(text, line, column_offset).parse();
}

}  // namespace arrango
