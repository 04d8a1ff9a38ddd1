#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtaft/rational.hpp"

namespace qtaft {

/// Coefficients of the L-th cyclotomic polynomial, constant term first,
/// monic of degree phi(L). Computed once per order and cached.
const std::vector<mpz_class>& cyclotomic_polynomial(long order);

/// Euler totient.
long totient(long n);

/// An element of Q(zeta_L), stored as the canonical remainder modulo the
/// L-th cyclotomic polynomial: a coefficient vector of length phi(L).
/// Equality of canonical coefficients is equality in the field, which is
/// what makes every identity check in this project exact.
///
/// Arithmetic between different orders first embeds both operands into
/// Q(zeta_lcm); the result carries the lcm order.
class CycNum {
 public:
  /// Zero in Q(zeta_1) = Q.
  CycNum();

  /// A rational constant, optionally placed at a given order.
  explicit CycNum(const Rational& value, long order = 1);
  explicit CycNum(long value, long order = 1);

  /// zeta_L^j in canonical form. j may be any integer (taken mod L).
  static CycNum root_of_unity(long order, long exponent);

  /// From raw canonical coefficients (length must be phi(order)).
  static CycNum from_coefficients(long order, std::vector<Rational> coeffs);

  long order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Defined only when is_rational().
  Rational rational_value() const;

  /// The same value viewed in Q(zeta_M); requires order() | M.
  CycNum embedded(long new_order) const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& rhs);
  CycNum& operator-=(const CycNum& rhs);
  CycNum& operator*=(const CycNum& rhs);
  friend CycNum operator+(CycNum lhs, const CycNum& rhs) { return lhs += rhs; }
  friend CycNum operator-(CycNum lhs, const CycNum& rhs) { return lhs -= rhs; }
  friend CycNum operator*(CycNum lhs, const CycNum& rhs) { return lhs *= rhs; }

  CycNum& operator*=(const Rational& scalar);
  friend CycNum operator*(CycNum lhs, const Rational& scalar) { return lhs *= scalar; }
  friend CycNum operator*(const Rational& scalar, CycNum rhs) { return rhs *= scalar; }

  /// Field inverse via extended Euclid against the cyclotomic polynomial.
  /// Throws division_by_zero on zero.
  CycNum inverse() const;

  /// Integer power; negative exponents go through inverse().
  CycNum pow(long exponent) const;

  /// Mathematical equality (operands are compared in Q(zeta_lcm)).
  friend bool operator==(const CycNum& lhs, const CycNum& rhs);
  friend bool operator!=(const CycNum& lhs, const CycNum& rhs) { return !(lhs == rhs); }

  /// Total order on (order, coefficient vector); used for deterministic
  /// tie-breaks and containers, not mathematically meaningful.
  friend bool lexicographically_less(const CycNum& lhs, const CycNum& rhs);

  /// Human-readable polynomial in z = zeta_order, e.g. "1 - 1/2*z^2".
  std::string to_string() const;

 private:
  long order_;
  std::vector<Rational> coeffs_;
};

/// If a is a power of zeta_order, returns the exponent in [0, order).
std::optional<long> root_of_unity_exponent(const CycNum& a, long order);

/// True iff a^r = 1 and a^s != 1 for 0 < s < r.
bool is_primitive_root(const CycNum& a, long r);

/// A square root of a in its own field, when one exists there.
/// Handles radicands of the form rational-square times root of unity,
/// which covers every scalar the classified action families produce.
/// The returned root is the lexicographically smaller of the pair +-y.
std::optional<CycNum> square_root(const CycNum& a);

/// zeta_order^exponent kept in symbolic form. Conversion to CycNum and
/// back round-trips; primitive_order() is order/gcd(order, exponent).
struct RootOfUnity {
  long order = 1;
  long exponent = 0;

  RootOfUnity() = default;
  RootOfUnity(long order_in, long exponent_in);

  CycNum value() const { return CycNum::root_of_unity(order, exponent); }
  long primitive_order() const;
  RootOfUnity inverse() const { return RootOfUnity(order, -exponent); }

  /// "zeta(L)^j"
  std::string to_string() const;
  static std::optional<RootOfUnity> from_string(const std::string& text);
  static std::optional<RootOfUnity> from_value(const CycNum& a, long order);

  friend bool operator==(const RootOfUnity& x, const RootOfUnity& y) {
    return x.order == y.order && x.exponent == y.exponent;
  }
};

}  // namespace qtaft
