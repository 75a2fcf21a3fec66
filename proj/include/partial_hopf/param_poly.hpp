#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partial_hopf/cyclotomic.hpp"

namespace partial_hopf {

using VarId = std::uint32_t;

/// Interns a parameter name; the same name always maps to the same id.
VarId intern_variable(std::string_view name);
std::string variable_name(VarId id);

/// Product of variables with positive exponents, sorted by variable id.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(VarId v, unsigned exponent = 1);

  bool empty() const { return factors_.empty(); }
  unsigned degree_in(VarId v) const;
  unsigned total_degree() const;
  const std::vector<std::pair<VarId, unsigned>>& factors() const { return factors_; }

  /// Copy with v removed entirely.
  Monomial without(VarId v) const;
  /// Copy with the exponent of v lowered by one (v must be present).
  Monomial lowered(VarId v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<std::pair<VarId, unsigned>> factors_;
};

/// Sparse multivariate polynomial over Q(zeta_n). Terms with zero
/// coefficient are never stored, so equality is structural.
class ParamPoly {
 public:
  using TermMap = std::map<Monomial, CycNumber>;

  explicit ParamPoly(int order = 1) : order_(order) {}
  ParamPoly(const CycNumber& constant);  // NOLINT(google-explicit-constructor)
  ParamPoly(int order, long constant) : ParamPoly(CycNumber(order, constant)) {}

  static ParamPoly variable(int order, std::string_view name);
  static ParamPoly variable(int order, VarId id);
  static ParamPoly monomial(const CycNumber& coeff, const Monomial& m);

  int order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Present iff the polynomial has no variables.
  std::optional<CycNumber> constant_value() const;

  /// Names of the variables that occur, sorted alphabetically.
  std::vector<std::string> vars() const;
  std::vector<VarId> var_ids() const;
  bool contains(VarId v) const;
  unsigned degree_in(VarId v) const;
  unsigned total_degree() const;

  /// Coefficient of v^e, as a polynomial in the remaining variables.
  ParamPoly coefficient_of(VarId v, unsigned e) const;
  /// Variables dividing every term.
  std::vector<VarId> common_variable_factors() const;
  /// Requires v to divide every term.
  ParamPoly divide_by_variable(VarId v) const;

  ParamPoly substitute(VarId v, const ParamPoly& value) const;
  /// Simultaneous substitution of several variables.
  ParamPoly substitute(const std::map<VarId, ParamPoly>& values) const;
  ParamPoly rename(const std::map<std::string, std::string>& names) const;

  /// Every variable must be assigned.
  CycNumber evaluate(const std::map<std::string, CycNumber>& assignment) const;

  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ParamPoly& other);
  ParamPoly& operator*=(const CycNumber& scalar);
  /// Adds coeff * m in place.
  void add_term(const Monomial& m, const CycNumber& coeff);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const CycNumber& s) { return a *= s; }
  friend ParamPoly operator*(const CycNumber& s, ParamPoly a) { return a *= s; }
  ParamPoly operator-() const;
  ParamPoly pow(unsigned exponent) const;

  friend bool operator==(const ParamPoly& a, const ParamPoly& b);

  /// Parseable text; the root of unity is written as `symbol`.
  std::string to_string(std::string_view symbol = "z") const;

 private:
  void require_same_order(const ParamPoly& other) const;

  int order_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

CycNumber poly_eval(const ParamPoly& p, const std::map<std::string, CycNumber>& assignment);
bool poly_is_zero(const ParamPoly& p);

}  // namespace partial_hopf
