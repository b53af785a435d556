#include "arrango/scalar.hpp"

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace arrango {

namespace {

using Poly = std::vector<long long>;

Poly exact_divide(Poly num, const Poly &den) {
  // den is monic
  std::size_t dn = den.size() - 1;
  Poly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long long c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

Poly cyclotomic_polynomial(unsigned n, std::map<unsigned, Poly> &memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = exact_divide(p, cyclotomic_polynomial(d, memo));
  memo[n] = p;
  return p;
}

std::unique_ptr<CycloField> make_field(unsigned n) {
  std::map<unsigned, Poly> memo;
  auto f = std::make_unique<CycloField>();
  f->order = n;
  f->modulus = cyclotomic_polynomial(n, memo);
  f->degree = f->modulus.size() - 1;
  std::size_t d = f->degree;
  std::vector<long long> v(d, 0);
  v[0] = 1;
  f->power.push_back(v);
  for (unsigned k = 1; k < n; ++k) {
    long long top = v[d - 1];
    for (std::size_t j = d - 1; j > 0; --j) v[j] = v[j - 1];
    v[0] = 0;
    if (top != 0)
      for (std::size_t j = 0; j < d; ++j) v[j] -= top * f->modulus[j];
    f->power.push_back(v);
  }
  return f;
}

const CycloField *rational_field() {
  static const CycloField *qq = &cyclo_field(1);
  return qq;
}

int rational_sign(const Rational &q) { return q.sign(); }

/// Solves A y = b exactly for A with full column rank (rows x cols).
/// Returns nothing when the system is inconsistent.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> b) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> y(cols, 0);
  for (std::size_t i = 0; i < r; ++i) y[pivot_col[i]] = b[i];
  return y;
}

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr &) = delete;
  Mpfr &operator=(const Mpfr &) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// cos(2 pi k / n) for 0 <= k < degree, at the given precision
const std::vector<std::unique_ptr<Mpfr>> &cos_table(unsigned n, std::size_t count,
                                                    mpfr_prec_t prec) {
  thread_local std::map<std::pair<unsigned, mpfr_prec_t>, std::vector<std::unique_ptr<Mpfr>>>
      cache;
  auto &entry = cache[{n, prec}];
  if (entry.size() < count) {
    Mpfr pi(prec);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    for (std::size_t k = entry.size(); k < count; ++k) {
      auto c = std::make_unique<Mpfr>(prec);
      mpfr_mul_ui(c->get(), pi.get(), 2 * k, MPFR_RNDN);
      mpfr_div_ui(c->get(), c->get(), n, MPFR_RNDN);
      mpfr_cos(c->get(), c->get(), MPFR_RNDN);
      entry.push_back(std::move(c));
    }
  }
  return entry;
}

// Real part of x at precision prec, and an upper bound on its error.
void enclose(const Scalar &x, mpfr_prec_t prec, Mpfr &value, Mpfr &bound) {
  const auto &cs = cos_table(x.order(), x.degree(), prec);
  Mpfr term(prec), q(prec), mag(prec);
  mpfr_set_zero(value.get(), 1);
  mpfr_set_zero(bound.get(), 1);
  for (std::size_t k = 0; k < x.degree(); ++k) {
    const Rational &c = x.coords()[k];
    if (c == 0) continue;
    mpfr_set_q(q.get(), c.backend().data(), MPFR_RNDN);
    mpfr_mul(term.get(), q.get(), cs[k]->get(), MPFR_RNDN);
    mpfr_add(value.get(), value.get(), term.get(), MPFR_RNDN);
    mpfr_set_q(mag.get(), c.backend().data(), MPFR_RNDU);
    mpfr_abs(mag.get(), mag.get(), MPFR_RNDU);
    mpfr_add(bound.get(), bound.get(), mag.get(), MPFR_RNDU);
  }
  mpfr_mul_ui(bound.get(), bound.get(), 64 + 2 * x.degree(), MPFR_RNDU);
  mpfr_div_2ui(bound.get(), bound.get(), static_cast<unsigned long>(prec), MPFR_RNDU);
}

unsigned initial_precision_from_env() {
  if (const char *env = std::getenv("ARRANGO_PRECISION")) {
    char *end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v >= 16 && v <= 1u << 20) return static_cast<unsigned>(v);
  }
  return 64;
}

std::atomic<unsigned> &precision_setting() {
  static std::atomic<unsigned> bits{initial_precision_from_env()};
  return bits;
}

void append_term(std::string &out, const Rational &c, const std::string &atom) {
  if (c == 0) return;
  std::string piece;
  if (atom.empty()) {
    piece = rational_to_string(c);
  } else if (c == 1) {
    piece = atom;
  } else if (c == -1) {
    piece = "-" + atom;
  } else {
    piece = rational_to_string(c) + "*" + atom;
  }
  if (!out.empty() && piece[0] != '-') out += "+";
  out += piece;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

unsigned lcm_order(unsigned a, unsigned b) { return std::lcm(a, b); }

const CycloField &cyclo_field(unsigned order) {
  if (order == 0) throw ScalarError("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<CycloField>> fields;
  std::lock_guard<std::mutex> lock(mutex);
  auto &slot = fields[order];
  if (!slot) slot = make_field(order);
  return *slot;
}

unsigned sign_precision() { return precision_setting().load(); }
void set_sign_precision(unsigned bits) { precision_setting().store(std::max(16u, bits)); }

std::string rational_to_string(const Rational &q) {
  std::string s = boost::multiprecision::numerator(q).str();
  const Integer den = boost::multiprecision::denominator(q);
  if (den != 1) s += "/" + den.str();
  return s;
}

Scalar::Scalar() : field_(rational_field()), coords_{Rational(0)} {}
Scalar::Scalar(long value) : field_(rational_field()), coords_{Rational(value)} {}
Scalar::Scalar(const Rational &value) : field_(rational_field()), coords_{value} {}
Scalar::Scalar(const CycloField &field, Coords coords) : field_(&field), coords_(std::move(coords)) {
  if (coords_.size() != field.degree) throw ScalarError("coordinate vector has wrong length");
}

Scalar Scalar::zeta(long k, unsigned order) {
  const CycloField &f = cyclo_field(order);
  long r = k % static_cast<long>(order);
  if (r < 0) r += order;
  Coords c(f.degree, Rational(0));
  const auto &p = f.power[static_cast<std::size_t>(r)];
  for (std::size_t j = 0; j < f.degree; ++j) c[j] = p[j];
  return Scalar(f, std::move(c));
}

bool Scalar::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational &q) { return q == 0; });
}

bool Scalar::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational &q) { return q == 0; });
}

std::optional<Rational> Scalar::to_rational() const {
  if (!is_rational()) return std::nullopt;
  return coords_[0];
}

bool Scalar::is_integer() const {
  return is_rational() && boost::multiprecision::denominator(coords_[0]) == 1;
}

bool Scalar::is_real() const {
  if (is_rational()) return true;
  return conj() == *this;
}

Scalar Scalar::conj() const {
  unsigned n = order();
  if (n <= 2) return *this;
  Coords out(degree(), Rational(0));
  for (std::size_t k = 0; k < degree(); ++k) {
    if (coords_[k] == 0) continue;
    const auto &p = field_->power[(n - k) % n];
    for (std::size_t j = 0; j < degree(); ++j)
      if (p[j] != 0) out[j] += coords_[k] * p[j];
  }
  return Scalar(*field_, std::move(out));
}

Scalar Scalar::embed(unsigned target) const {
  unsigned n = order();
  if (target == n) return *this;
  if (target % n != 0) throw ScalarError("cannot embed Q(zeta_" + std::to_string(n) + ") into Q(zeta_" +
                                         std::to_string(target) + ")");
  const CycloField &f = cyclo_field(target);
  unsigned step = target / n;
  Coords out(f.degree, Rational(0));
  for (std::size_t k = 0; k < degree(); ++k) {
    if (coords_[k] == 0) continue;
    const auto &p = f.power[(k * step) % target];
    for (std::size_t j = 0; j < f.degree; ++j)
      if (p[j] != 0) out[j] += coords_[k] * p[j];
  }
  return Scalar(f, std::move(out));
}

std::optional<Scalar> Scalar::descend(unsigned target) const {
  unsigned n = order();
  if (target == n) return *this;
  if (n % target != 0) return std::nullopt;
  if (is_rational()) return Scalar(coords_[0]).embed(target);
  const CycloField &small = cyclo_field(target);
  unsigned step = n / target;
  std::vector<std::vector<Rational>> a(degree(), std::vector<Rational>(small.degree, Rational(0)));
  for (std::size_t k = 0; k < small.degree; ++k) {
    const auto &p = field_->power[(k * step) % n];
    for (std::size_t j = 0; j < degree(); ++j) a[j][k] = p[j];
  }
  std::vector<Rational> b(coords_.begin(), coords_.end());
  auto y = solve_exact(std::move(a), std::move(b));
  if (!y) return std::nullopt;
  return Scalar(small, Coords(y->begin(), y->end()));
}

Scalar Scalar::minimal() const {
  if (is_rational()) return Scalar(coords_[0]);
  unsigned n = order();
  for (unsigned d = 3; d < n; ++d) {
    if (n % d != 0) continue;
    if (auto s = descend(d)) return *s;
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ScalarError("division by zero");
  if (is_rational()) return Scalar(Rational(1) / coords_[0]).embed(order());
  std::size_t d = degree();
  // column j of the multiplication matrix is x^j * this
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d, Rational(0)));
  for (std::size_t j = 0; j < d; ++j) {
    Scalar col = zeta(static_cast<long>(j), order()) * *this;
    for (std::size_t i = 0; i < d; ++i) a[i][j] = col.coords_[i];
  }
  std::vector<Rational> b(d, Rational(0));
  b[0] = 1;
  auto y = solve_exact(std::move(a), std::move(b));
  if (!y) throw ScalarError("singular multiplication matrix");
  return Scalar(*field_, Coords(y->begin(), y->end()));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto &c : r.coords_) c = -c;
  return r;
}

Scalar &Scalar::operator+=(const Scalar &rhs) {
  if (field_ == rhs.field_) {
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += rhs.coords_[k];
    return *this;
  }
  unsigned l = lcm_order(order(), rhs.order());
  *this = embed(l);
  Scalar o = rhs.embed(l);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &rhs) { return *this += -rhs; }

Scalar &Scalar::operator*=(const Scalar &rhs) {
  if (field_ != rhs.field_) {
    unsigned l = lcm_order(order(), rhs.order());
    if (rhs.order() == 1 || rhs.is_rational()) {
      if (order() != l) *this = embed(l);
      const Rational &q = rhs.coords_[0];
      for (auto &c : coords_) c *= q;
      return *this;
    }
    if (order() == 1) {
      Rational q = coords_[0];
      *this = rhs.embed(l);
      for (auto &c : coords_) c *= q;
      return *this;
    }
    *this = embed(l);
    return *this *= rhs.embed(l);
  }
  std::size_t d = degree();
  if (d == 1) {
    coords_[0] *= rhs.coords_[0];
    return *this;
  }
  std::vector<Rational> tmp(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (rhs.coords_[j] != 0) tmp[i + j] += coords_[i] * rhs.coords_[j];
  }
  unsigned n = order();
  Coords out(d, Rational(0));
  for (std::size_t k = 0; k < d; ++k) out[k] = std::move(tmp[k]);
  for (std::size_t k = d; k < tmp.size(); ++k) {
    if (tmp[k] == 0) continue;
    const auto &p = field_->power[k % n];
    for (std::size_t j = 0; j < d; ++j)
      if (p[j] != 0) out[j] += tmp[k] * p[j];
  }
  coords_ = std::move(out);
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &rhs) {
  if (rhs.is_rational()) {
    if (rhs.coords_[0] == 0) throw ScalarError("division by zero");
    unsigned l = lcm_order(order(), rhs.order());
    if (order() != l) *this = embed(l);
    const Rational &q = rhs.coords_[0];
    for (auto &c : coords_) c /= q;
    return *this;
  }
  return *this *= rhs.inverse();
}

bool operator==(const Scalar &a, const Scalar &b) {
  if (a.field_ == b.field_) return a.coords_ == b.coords_;
  unsigned l = lcm_order(a.order(), b.order());
  return a.embed(l).coords_ == b.embed(l).coords_;
}

int Scalar::sign() const {
  if (is_rational()) return rational_sign(coords_[0]);
  if (!is_real()) throw ScalarError("sign of a non-real element " + to_string());
  auto prec = static_cast<mpfr_prec_t>(sign_precision());
  for (;;) {
    Mpfr value(prec), bound(prec);
    enclose(*this, prec, value, bound);
    if (mpfr_cmpabs(value.get(), bound.get()) > 0) return mpfr_sgn(value.get()) > 0 ? 1 : -1;
    prec *= 2;
  }
}

double Scalar::to_double() const {
  if (is_rational()) return coords_[0].convert_to<double>();
  Mpfr value(64), bound(64);
  enclose(*this, 64, value, bound);
  return mpfr_get_d(value.get(), MPFR_RNDN);
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational_to_string(coords_[0]);
  Scalar m = minimal();
  unsigned n = m.order();
  std::size_t d = m.degree();
  std::string out;
  if (m.is_real()) {
    // real subfield basis cos(k,n), 0 <= k < d/2
    std::size_t h = d / 2;
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(h, Rational(0)));
    for (std::size_t k = 0; k < h; ++k) {
      Scalar c = cos_frac(static_cast<long>(k), n);
      for (std::size_t j = 0; j < d; ++j) a[j][k] = c.coords_[j];
    }
    auto y = solve_exact(std::move(a), std::vector<Rational>(m.coords_.begin(), m.coords_.end()));
    if (!y) throw ScalarError("real element outside the cosine span");
    for (std::size_t k = 0; k < h; ++k)
      append_term(out, (*y)[k], k == 0 ? "" : "cos(" + std::to_string(k) + "," + std::to_string(n) + ")");
  } else {
    for (std::size_t k = 0; k < d; ++k)
      append_term(out, m.coords_[k],
                  k == 0 ? "" : "zeta(" + std::to_string(k) + "," + std::to_string(n) + ")");
  }
  return out.empty() ? "0" : out;
}

std::size_t Scalar::hash() const {
  Scalar m = minimal();
  std::size_t h = m.order();
  for (const auto &c : m.coords_) {
    const Integer num = boost::multiprecision::numerator(c);
    const Integer den = boost::multiprecision::denominator(c);
    std::size_t part = static_cast<std::size_t>(mpz_get_ui(num.backend().data())) * 31u +
                       static_cast<std::size_t>(num.sign() + 1) * 7u +
                       static_cast<std::size_t>(mpz_get_ui(den.backend().data()));
    h ^= part + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Scalar cos_frac(long k, unsigned n) {
  if (n == 0) throw ScalarError("cos_frac: N must be positive");
  Scalar z = Scalar::zeta(k, n);
  return (z + z.conj()) / Scalar(Rational(2));
}

Scalar sin_frac(long k, unsigned n) {
  if (n == 0) throw ScalarError("sin_frac: N must be positive");
  unsigned m = lcm_order(n, 4);
  Scalar z = Scalar::zeta(k * static_cast<long>(m / n), m);
  Scalar minus_i = Scalar::zeta(3 * static_cast<long>(m / 4), m);
  return (z - z.conj()) * minus_i / Scalar(Rational(2));
}

int compare(const Scalar &a, const Scalar &b) { return (a - b).sign(); }

Scalar abs(const Scalar &x) { return x.sign() < 0 ? -x : x; }

}  // namespace arrango
