#pragma once

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrango {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

class ScalarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Data for Q(zeta_N): the cyclotomic polynomial and the reductions of
/// x^k modulo it for 0 <= k < N. Instances are interned and never freed.
struct CycloField {
  unsigned order;
  std::size_t degree;
  std::vector<long long> modulus;             // low to high, monic
  std::vector<std::vector<long long>> power;  // power[k] = x^k mod Phi_N
};

const CycloField &cyclo_field(unsigned order);
unsigned euler_phi(unsigned n);
unsigned lcm_order(unsigned a, unsigned b);

/// Exact element of Q(zeta_N) in the power basis. QQ is the case N = 1.
///
/// Mixed-order operands are coerced to Q(zeta_lcm). Results keep the
/// larger field, so 1/2 may live in Q(zeta_6); equality is by value.
class Scalar {
 public:
  using Coords = boost::container::small_vector<Rational, 2>;

  Scalar();
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(int value) : Scalar(static_cast<long>(value)) {}  // NOLINT
  Scalar(const Rational &value);                            // NOLINT
  Scalar(const CycloField &field, Coords coords);

  static Scalar zeta(long k, unsigned order);

  unsigned order() const { return field_->order; }
  std::size_t degree() const { return field_->degree; }
  const Coords &coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> to_rational() const;
  bool is_real() const;
  bool is_integer() const;

  Scalar conj() const;
  Scalar inverse() const;
  Scalar embed(unsigned order) const;
  /// The same value expressed in Q(zeta_order) if it lies there.
  std::optional<Scalar> descend(unsigned order) const;
  /// The same value in the smallest field Q(zeta_d), d | order().
  Scalar minimal() const;

  /// Exact sign of a real element. Throws on non-real input.
  int sign() const;
  double to_double() const;
  /// Canonical literal accepted by parse_scalar.
  std::string to_string() const;
  std::size_t hash() const;

  Scalar operator-() const;
  Scalar &operator+=(const Scalar &rhs);
  Scalar &operator-=(const Scalar &rhs);
  Scalar &operator*=(const Scalar &rhs);
  Scalar &operator/=(const Scalar &rhs);

  friend Scalar operator+(Scalar lhs, const Scalar &rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar &rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar &rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar &rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar &a, const Scalar &b);
  friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

 private:
  const CycloField *field_;
  Coords coords_;
};

Scalar cos_frac(long k, unsigned n);
Scalar sin_frac(long k, unsigned n);

/// Three-way comparison of real elements.
int compare(const Scalar &a, const Scalar &b);
Scalar abs(const Scalar &x);

/// Initial precision in bits for sign enclosures. Defaults to the value
/// of ARRANGO_PRECISION or 64.
unsigned sign_precision();
void set_sign_precision(unsigned bits);

std::string rational_to_string(const Rational &q);

struct ParseError : std::runtime_error {
  ParseError(const std::string &msg, std::size_t line, std::size_t column);
  std::size_t line;
  std::size_t column;
};

/// Parses the scalar literal grammar: integers, + - * /, parentheses,
/// cos(k,N), sin(k,N), zeta(k,N). Positions in errors are reported
/// relative to `column_offset` on `line`.
Scalar parse_scalar(const std::string &text, std::size_t line = 1,
                    std::size_t column_offset = 1);

}  // namespace arrango

template <>
struct std::hash<arrango::Scalar> {
  std::size_t operator()(const arrango::Scalar &s) const { return s.hash(); }
};
