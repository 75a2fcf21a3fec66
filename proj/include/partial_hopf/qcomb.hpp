#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "partial_hopf/cyclotomic.hpp"

namespace partial_hopf {

/// Laurent polynomial in an indeterminate q with integer coefficients:
/// sum_k coeffs[k] * q^(low + k). Kept trimmed, so equality is structural.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(const Integer& c);
  static LaurentPoly q_power(long exponent);

  bool is_zero() const { return coeffs_.empty(); }
  long low_degree() const { return low_; }
  long high_degree() const { return low_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  /// Multiplication by q^k.
  LaurentPoly shifted(long k) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
  long low_ = 0;
};

/// Value of q: a concrete nonzero element of Q(zeta_n) (order 1 for rational
/// sample points), or the indeterminate itself ("generic q").
class QScalar {
 public:
  static QScalar generic();
  static QScalar concrete(const CycNumber& value);

  bool is_generic() const { return std::holds_alternative<LaurentPoly>(value_); }
  const CycNumber& as_concrete() const { return std::get<CycNumber>(value_); }
  const LaurentPoly& as_generic() const { return std::get<LaurentPoly>(value_); }

  /// Constants in the same ring as this value.
  QScalar zero() const;
  QScalar one() const;
  QScalar from_integer(long c) const;

  bool is_zero() const;
  QScalar pow(long exponent) const;

  QScalar& operator+=(const QScalar& other);
  QScalar& operator-=(const QScalar& other);
  QScalar& operator*=(const QScalar& other);
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  QScalar operator-() const;

  friend bool operator==(const QScalar& a, const QScalar& b);
  std::string to_string() const;
  /// "q", "2", "5/7", "zeta_8".
  std::string label() const;

 private:
  explicit QScalar(std::variant<CycNumber, LaurentPoly> v) : value_(std::move(v)) {}
  std::variant<CycNumber, LaurentPoly> value_;
};

/// q-numbers, q-factorials and q-binomials for one fixed q, memoised.
/// Binomials come from the recurrence C(m,l) = C(m-1,l-1) + q^l C(m-1,l)
/// seeded with C(0,0) = 1 and C(m,l) = 0 outside 0 <= l <= m, so no division
/// is ever needed, including at roots of unity.
class QCombinatorics {
 public:
  explicit QCombinatorics(QScalar q);

  const QScalar& q() const { return q_; }
  QScalar power(long k);
  QScalar number(long m);
  QScalar factorial(long m);
  /// Zero when l < 0, l > m or m < 0.
  QScalar binomial(long m, long l);

 private:
  void extend_rows(long m);

  QScalar q_;
  std::vector<QScalar> positive_powers_;
  std::vector<std::vector<QScalar>> rows_;
};

QScalar q_number(long m, const QScalar& q);
QScalar q_factorial(long m, const QScalar& q);
QScalar q_binomial(long m, long l, const QScalar& q);

/// Outcome of comparing two exactly computed sides of an identity.
struct Verdict {
  bool pass;
  QScalar lhs;
  QScalar rhs;
  std::string label;
};

/// Two forms of the q-Pascal rule:
///   kStandard:  C(i,s) = C(i-1,s-1) + q^s     C(i-1,s)
///   kReflected: C(i,s) = C(i-1,s)   + q^(i-s) C(i-1,s-1)
enum class PascalForm { kStandard, kReflected };

Verdict check_pascal(PascalForm form, long i, long s, QCombinatorics& qc);
Verdict check_pascal(PascalForm form, long i, long s, const QScalar& q);

/// The q-binomial identities behind the Taft partial action classification.
///   kAlternatingSum (i,t,k):
///     sum_{s=0}^{i} C(i,s) C(i+t-s,i+k) (-1)^s q^(sk + s(s+1)/2) = C(t,k)
///   kBinomialProduct (i,j,l), 0 <= l <= i <= j:
///     C(j,l) C(j-l,i-l) = C(j,i) C(i,l)
///   kSymmetrySum (i,j,t,s):
///     q^(s(i-j)) sum_{l=0}^{j} C(j,l) C(j+t-l,i+s-l) C(l,i) (-1)^(i-l) q^((i-l)(i-l+1)/2) = C(j,i) C(t,s)
///   kShiftedAlternatingSum (j,t,s):
///     q^(-sj) sum_{l=0}^{j} C(j,l) C(j+t-l,s-l) (-1)^l q^(l(l-1)/2) = C(t,s)
/// Negative powers of q are cleared by multiplying both sides through by the
/// smallest power of q that makes every exponent nonnegative.
enum class QIdentity { kAlternatingSum, kBinomialProduct, kSymmetrySum, kShiftedAlternatingSum };

std::string identity_name(QIdentity id);
std::optional<QIdentity> identity_from_name(std::string_view name);
std::size_t identity_arity(QIdentity id);

/// Throws ArityMismatch, or PreconditionViolated for a bad kBinomialProduct ordering.
Verdict check_identity(QIdentity id, std::span<const long> indices, QCombinatorics& qc);
Verdict check_identity(QIdentity id, std::span<const long> indices, const QScalar& q);

/// Index bounds for the exhaustive sweeps.
struct IdentitySweepConfig {
  long pascal_i_max = 10;
  long pascal_s_min = -2;
  long pascal_s_max = 12;
  long alternating_max = 6;
  long product_j_max = 8;
  long symmetry_max = 5;
  long shifted_max = 5;
  long symmetric_binomial_m_max = 10;
  int root_order_min = 2;
  int root_order_max = 8;
  std::vector<Rational> rational_points{Rational(2), Rational(3), Rational(5, 7)};
  bool include_generic = true;

  /// Every bound set to `max` (the Pascal upper index too).
  static IdentitySweepConfig uniform(long max, int root_order_max);
};

struct SuiteResult {
  std::string suite;
  std::string q_label;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few, for diagnostics
};

struct IdentitySweepReport {
  std::vector<SuiteResult> suites;
  bool all_passed() const;
  std::size_t total_checked() const;
};

/// Every q in the config against every suite. Parallel over q values.
IdentitySweepReport sweep_identities(const IdentitySweepConfig& config);

/// The q values a sweep visits, in order.
std::vector<QScalar> sweep_points(const IdentitySweepConfig& config);

}  // namespace partial_hopf
