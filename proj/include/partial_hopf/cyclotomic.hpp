#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partial_hopf/rational.hpp"

namespace partial_hopf {

/// Dense univariate polynomial with integer coefficients, coeffs[k] is the
/// coefficient of x^k. The zero polynomial has no coefficients.
struct IntPoly {
  std::vector<Integer> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  void trim();
  std::string to_string(char var = 'x') const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
};

int euler_phi(int n);

/// The n-th cyclotomic polynomial, obtained by exact division of x^n - 1 by
/// the product of the cyclotomic polynomials of the proper divisors of n.
IntPoly cyclotomic_polynomial(int n);

/// Arithmetic context for Q(zeta_n) = Q[x]/Phi_n(x). Instances are created
/// once per order and live for the whole program.
class CyclotomicField {
 public:
  explicit CyclotomicField(int order);

  int order() const { return order_; }
  int degree() const { return phi_; }
  const IntPoly& modulus() const { return modulus_; }

  /// Canonical coordinates of x^e for 0 <= e < reduction_span().
  std::span<const Integer> power(int e) const;
  int reduction_span() const { return static_cast<int>(powers_.size()); }

 private:
  int order_;
  int phi_;
  IntPoly modulus_;
  std::vector<std::vector<Integer>> powers_;
};

/// Shared, thread-safe lookup of the context for Q(zeta_n).
const CyclotomicField& cyclotomic_field(int order);

/// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1).
/// Order 1 (and order 2) is plain Q.
class CycNumber {
 public:
  /// Zero of Q.
  CycNumber();
  /// Zero of Q(zeta_order).
  explicit CycNumber(int order);
  CycNumber(int order, const Rational& value);
  CycNumber(int order, long value) : CycNumber(order, Rational(value)) {}
  /// coords.size() must equal phi(order).
  CycNumber(int order, std::vector<Rational> coords);

  int order() const { return field_->order(); }
  const CyclotomicField& field() const { return *field_; }
  std::span<const Rational> coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Requires is_rational().
  const Rational& rational_part() const { return coords_[0]; }

  CycNumber inverse() const;
  CycNumber pow(long exponent) const;

  CycNumber& operator+=(const CycNumber& other);
  CycNumber& operator-=(const CycNumber& other);
  CycNumber& operator*=(const CycNumber& other);
  CycNumber& operator/=(const CycNumber& other);
  CycNumber& operator*=(const Rational& scalar);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }
  friend CycNumber operator*(CycNumber a, const Rational& s) { return a *= s; }
  friend CycNumber operator*(const Rational& s, CycNumber a) { return a *= s; }
  CycNumber operator-() const;

  friend bool operator==(const CycNumber& a, const CycNumber& b);
  /// Total order on coordinates, only meaningful within one field.
  friend std::strong_ordering operator<=>(const CycNumber& a, const CycNumber& b);

  /// Parseable text, e.g. "1/2+1/2*z^2". The generator is written as `symbol`.
  std::string to_string(std::string_view symbol = "z") const;
  std::size_t hash() const;

 private:
  void require_same_field(const CycNumber& other) const;

  const CyclotomicField* field_;
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const CycNumber& c);

/// zeta_n^(k mod n).
CycNumber zeta_pow(int n, long k);

/// Multiplicative inverse; throws DivisionByZero for 0.
CycNumber cyc_invert(const CycNumber& a);

}  // namespace partial_hopf
