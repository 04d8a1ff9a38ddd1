#include "qtaft/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "qtaft/errors.hpp"

namespace qtaft {

namespace {

// Exact division of integer polynomials, used to build cyclotomic
// polynomials from x^L - 1. Both inputs monic, remainder known to be zero.
std::vector<mpz_class> divide_monic(const std::vector<mpz_class>& num,
                                    const std::vector<mpz_class>& den) {
  std::vector<mpz_class> rem = num;
  const size_t dn = den.size() - 1;
  std::vector<mpz_class> quot(rem.size() - dn, 0);
  for (size_t k = rem.size() - 1; k + 1 > dn; --k) {
    const mpz_class coeff = rem[k];
    if (coeff != 0) {
      quot[k - dn] = coeff;
      for (size_t i = 0; i <= dn; ++i) rem[k - dn + i] -= coeff * den[i];
    }
  }
  return quot;
}

struct FieldContext {
  long order = 1;
  long degree = 1;  // phi(order)
  // x^k reduced modulo the cyclotomic polynomial, for k = 0..order-1.
  // Products of canonical representatives have all exponents < order
  // after folding exponent sums mod order (zeta^order = 1).
  std::vector<std::vector<Rational>> power_rows;
};

const FieldContext& field_context(long order);

std::vector<mpz_class> compute_cyclotomic(long order) {
  if (order == 1) return {mpz_class(-1), mpz_class(1)};  // x - 1
  // (x^order - 1) / prod_{d | order, d < order} Phi_d
  std::vector<mpz_class> num(order + 1, 0);
  num[0] = -1;
  num[order] = 1;
  for (long d = 1; d < order; ++d) {
    if (order % d != 0) continue;
    num = divide_monic(num, cyclotomic_polynomial(d));
  }
  return num;
}

FieldContext compute_context(long order) {
  FieldContext ctx;
  ctx.order = order;
  const auto& phi_poly = cyclotomic_polynomial(order);
  ctx.degree = static_cast<long>(phi_poly.size()) - 1;
  ctx.power_rows.resize(order);
  for (long k = 0; k < order; ++k) {
    auto& row = ctx.power_rows[k];
    row.assign(ctx.degree, Rational(0));
    if (k < ctx.degree) {
      row[k] = 1;
    } else {
      // x^k = x * x^(k-1) reduced: shift previous row, fold the overflow.
      const auto& prev = ctx.power_rows[k - 1];
      std::vector<Rational> shifted(ctx.degree + 1, Rational(0));
      for (long i = 0; i < ctx.degree; ++i) shifted[i + 1] = prev[i];
      const Rational lead = shifted[ctx.degree];
      for (long i = 0; i < ctx.degree; ++i) {
        row[i] = shifted[i] - lead * Rational(phi_poly[i]);
      }
    }
  }
  return ctx;
}

const FieldContext& field_context(long order) {
  static std::mutex mutex;
  static std::map<long, FieldContext> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_context(order)).first;
  return it->second;
}

void check_order(long order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
}

long mod(long value, long modulus) {
  long r = value % modulus;
  return r < 0 ? r + modulus : r;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(long order) {
  check_order(order);
  static std::mutex mutex;
  static std::map<long, std::vector<mpz_class>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
  }
  auto poly = compute_cyclotomic(order);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(order, std::move(poly)).first->second;
}

long totient(long n) {
  check_order(n);
  return static_cast<long>(cyclotomic_polynomial(n).size()) - 1;
}

CycNum::CycNum() : order_(1), coeffs_(1, Rational(0)) {}

CycNum::CycNum(const Rational& value, long order) : order_(order) {
  check_order(order);
  coeffs_.assign(totient(order), Rational(0));
  coeffs_[0] = value;
}

CycNum::CycNum(long value, long order) : CycNum(Rational(value), order) {}

CycNum CycNum::root_of_unity(long order, long exponent) {
  check_order(order);
  const auto& ctx = field_context(order);
  CycNum result;
  result.order_ = order;
  result.coeffs_ = ctx.power_rows[mod(exponent, order)];
  return result;
}

CycNum CycNum::from_coefficients(long order, std::vector<Rational> coeffs) {
  check_order(order);
  if (static_cast<long>(coeffs.size()) != totient(order))
    throw std::invalid_argument("coefficient vector length must be phi(order)");
  CycNum result;
  result.order_ = order;
  result.coeffs_ = std::move(coeffs);
  // GMP arithmetic requires canonical operands.
  for (auto& c : result.coeffs_) c.canonicalize();
  return result;
}

bool CycNum::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

bool CycNum::is_one() const {
  if (sgn(coeffs_[0] - 1) != 0) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

bool CycNum::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

Rational CycNum::rational_value() const {
  if (!is_rational()) throw std::domain_error("value is not rational");
  return coeffs_[0];
}

CycNum CycNum::embedded(long new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0)
    throw std::invalid_argument("embedding requires the old order to divide the new one");
  const auto& ctx = field_context(new_order);
  const long step = new_order / order_;
  CycNum result;
  result.order_ = new_order;
  result.coeffs_.assign(ctx.degree, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const auto& row = ctx.power_rows[mod(static_cast<long>(i) * step, new_order)];
    for (long t = 0; t < ctx.degree; ++t) result.coeffs_[t] += coeffs_[i] * row[t];
  }
  return result;
}

CycNum CycNum::operator-() const {
  CycNum result = *this;
  for (auto& c : result.coeffs_) c = -c;
  return result;
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
  if (order_ != rhs.order_) {
    const long target = std::lcm(order_, rhs.order_);
    *this = embedded(target);
    return *this += rhs.embedded(target);
  }
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
  if (order_ != rhs.order_) {
    const long target = std::lcm(order_, rhs.order_);
    *this = embedded(target);
    return *this -= rhs.embedded(target);
  }
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& rhs) {
  if (order_ != rhs.order_) {
    const long target = std::lcm(order_, rhs.order_);
    *this = embedded(target);
    return *this *= rhs.embedded(target);
  }
  const auto& ctx = field_context(order_);
  // Convolve with exponents folded mod order, then reduce the tail rows.
  std::vector<Rational> folded(order_, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (sgn(rhs.coeffs_[j]) == 0) continue;
      folded[mod(static_cast<long>(i + j), order_)] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  std::vector<Rational> reduced(ctx.degree, Rational(0));
  for (long k = 0; k < order_; ++k) {
    if (sgn(folded[k]) == 0) continue;
    if (k < ctx.degree) {
      reduced[k] += folded[k];
    } else {
      const auto& row = ctx.power_rows[k];
      for (long t = 0; t < ctx.degree; ++t) reduced[t] += folded[k] * row[t];
    }
  }
  coeffs_ = std::move(reduced);
  return *this;
}

CycNum& CycNum::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

namespace {

using Poly = std::vector<Rational>;  // dense, constant term first

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder of a by b over Q.
void poly_divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  rem = a;
  trim(rem);
  quot.clear();
  if (rem.size() < b.size()) return;
  quot.assign(rem.size() - b.size() + 1, Rational(0));
  const Rational lead_inv = Rational(1) / b.back();
  while (rem.size() >= b.size()) {
    const size_t shift = rem.size() - b.size();
    const Rational c = rem.back() * lead_inv;
    quot[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    trim(rem);
    if (rem.empty()) break;
  }
}

}  // namespace

CycNum CycNum::inverse() const {
  if (is_zero()) throw division_by_zero("inverse of zero in Q(zeta)");
  if (is_rational()) {
    CycNum result = *this;
    result.coeffs_[0] = Rational(1) / coeffs_[0];
    return result;
  }
  // Extended Euclid: s*a + t*Phi = gcd = constant, so a^{-1} = s/gcd.
  const auto& phi_int = cyclotomic_polynomial(order_);
  Poly modulus(phi_int.size());
  for (size_t i = 0; i < phi_int.size(); ++i) modulus[i] = Rational(phi_int[i]);
  Poly r0 = modulus;
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0 = {};           // coefficient of a in r0
  Poly s1 = {Rational(1)};
  while (!(r1.size() == 1)) {
    Poly quot, rem;
    poly_divmod(r0, r1, quot, rem);
    Poly s2 = poly_sub(s0, poly_mul(quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const Rational g = r1[0];
  CycNum result;
  result.order_ = order_;
  result.coeffs_.assign(coeffs_.size(), Rational(0));
  for (size_t i = 0; i < s1.size() && i < result.coeffs_.size(); ++i)
    result.coeffs_[i] = s1[i] / g;
  // s1 has degree < deg(Phi) by the Euclid invariant, so no reduction needed.
  return result;
}

CycNum CycNum::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CycNum base = *this;
  CycNum result(Rational(1), order_);
  long e = exponent;
  while (e > 0) {
    if (e & 1) result *= base;
    if (e >>= 1) base *= base;
  }
  return result;
}

bool operator==(const CycNum& lhs, const CycNum& rhs) {
  if (lhs.order_ == rhs.order_) return lhs.coeffs_ == rhs.coeffs_;
  const long target = std::lcm(lhs.order_, rhs.order_);
  return lhs.embedded(target).coeffs_ == rhs.embedded(target).coeffs_;
}

bool lexicographically_less(const CycNum& lhs, const CycNum& rhs) {
  if (lhs.order_ != rhs.order_) {
    const long target = std::lcm(lhs.order_, rhs.order_);
    return lexicographically_less(lhs.embedded(target), rhs.embedded(target));
  }
  for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    const int c = cmp(lhs.coeffs_[i], rhs.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string CycNum::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    Rational c = coeffs_[i];
    if (first) {
      if (sgn(c) < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    }
    const bool unit_coeff = (c == 1);
    if (i == 0 || !unit_coeff) out << c.get_str();
    if (i > 0) {
      if (!unit_coeff) out << "*";
      out << "z" << order_;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

std::optional<long> root_of_unity_exponent(const CycNum& a, long order) {
  const CycNum in_field = (a.order() == order) ? a : a.embedded(std::lcm(a.order(), order));
  const long scan_order = in_field.order();
  const long step = scan_order / order;
  for (long j = 0; j < order; ++j) {
    if (in_field == CycNum::root_of_unity(scan_order, j * step)) return j;
  }
  return std::nullopt;
}

bool is_primitive_root(const CycNum& a, long r) {
  if (r < 1) return false;
  CycNum power = a;
  for (long s = 1; s < r; ++s) {
    if (power.is_one()) return false;
    power *= a;
  }
  return power.is_one();
}

std::optional<CycNum> square_root(const CycNum& a) {
  if (a.is_zero()) return CycNum(Rational(0), a.order());
  const long order = a.order();
  // Decompositions a = q * zeta^j with q a positive rational square give
  // roots sqrt(q) * zeta^e; the root with the smallest exponent e is the
  // deterministic representative of the pair +-y (so sqrt(1) = 1).
  std::optional<long> best_exponent;
  Rational best_rational;
  for (long j = 0; j < order; ++j) {
    const CycNum q_part = a * CycNum::root_of_unity(order, -j);
    if (!q_part.is_rational()) continue;
    const Rational q = q_part.rational_value();
    Rational q_root;
    if (!rational_square_root(q, q_root)) continue;
    std::vector<long> exponents;
    if (j % 2 == 0) exponents.push_back(j / 2);
    if ((j + order) % 2 == 0) exponents.push_back(((j + order) / 2) % order);
    for (const long e : exponents) {
      if (!best_exponent || e < *best_exponent) {
        best_exponent = e;
        best_rational = q_root;
      }
    }
  }
  if (!best_exponent) return std::nullopt;
  return CycNum(best_rational, order) * CycNum::root_of_unity(order, *best_exponent);
}

RootOfUnity::RootOfUnity(long order_in, long exponent_in) : order(order_in) {
  check_order(order_in);
  exponent = mod(exponent_in, order_in);
}

long RootOfUnity::primitive_order() const {
  return order / std::gcd(order, exponent == 0 ? order : exponent);
}

std::string RootOfUnity::to_string() const {
  std::ostringstream out;
  out << "zeta(" << order << ")^" << exponent;
  return out.str();
}

std::optional<RootOfUnity> RootOfUnity::from_string(const std::string& text) {
  long ord = 0, exp = 0;
  char caret = 0;
  std::istringstream in(text);
  std::string head;
  std::getline(in, head, '(');
  if (head != "zeta") return std::nullopt;
  if (!(in >> ord)) return std::nullopt;
  char close = 0;
  if (!(in >> close) || close != ')') return std::nullopt;
  if (!(in >> caret) || caret != '^') return std::nullopt;
  if (!(in >> exp)) return std::nullopt;
  if (ord < 1) return std::nullopt;
  return RootOfUnity(ord, exp);
}

std::optional<RootOfUnity> RootOfUnity::from_value(const CycNum& a, long order) {
  const auto exp = root_of_unity_exponent(a, order);
  if (!exp) return std::nullopt;
  return RootOfUnity(order, *exp);
}

}  // namespace qtaft
