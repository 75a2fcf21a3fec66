#pragma once

#include <string>
#include <vector>

#include "partial_hopf/hopf.hpp"

namespace partial_hopf {

/// A partial action of H on the base field, given by lambda in H*.
struct ActionFamily {
  std::string name;
  HopfPtr algebra;
  std::vector<std::string> params;
  Functional functional;
};

/// A partial coaction of H on the base field, given by z in H.
struct CoactionFamily {
  std::string name;
  HopfPtr algebra;
  std::vector<std::string> params;
  AlgElement element;
};

/// lambda(1) = 1 and lambda(h)lambda(y) = lambda(h_1)lambda(h_2 y) on every basis pair.
Report verify_partial_action(const Functional& lambda);
/// lambda(1) = 1 and the symmetric condition lambda(h)lambda(y) = lambda(h_1 y)lambda(h_2).
/// A symmetric partial action passes both this and verify_partial_action.
Report verify_symmetric_action(const Functional& lambda);
/// eps(z) = 1, z (x) z = (z (x) 1)delta(z), and z z = z.
Report verify_partial_coaction(const AlgElement& z);
/// eps(z) = 1 and the symmetric condition z (x) z = delta(z)(z (x) 1).
Report verify_symmetric_coaction(const AlgElement& z);

/// lambda applied to a numeric vector.
ParamPoly evaluate_on(const Functional& lambda, const SparseVec& v);

// Default parameter names.
inline constexpr const char* kTaftParam = "alpha";
std::string nichols_param(int i);

ActionFamily counit_action(HopfPtr H);
CoactionFamily unit_coaction(HopfPtr H);

/// lambda(g^((n-i) mod n) x^j) = q^(i(i+1)/2) C(j,i)_q (-1)^i alpha^j.
ActionFamily taft_lambda_alpha(int n);
/// Indicator of the subgroup <g^k> on group-likes, zero on every g^i x^j with j >= 1.
ActionFamily taft_lambda_N0(int n, int k);
/// The idempotent z_alpha obtained from lambda_alpha through the self-duality.
CoactionFamily taft_z_alpha(int n);
/// (1/|N|) sum of the elements of N = <g^k>.
CoactionFamily taft_z_N(int n, int k);

/// 1* + sum_i alpha_i [(x_i)* + (g x_i)*].
ActionFamily nichols_lambda_alpha(int n);
/// (1+g)/2 - sum_i alpha_i g x_i.
CoactionFamily nichols_z_alpha(int n);

/// Indicator of N = <g^d> on the group algebra of C_n.
ActionFamily group_partial_action(int n, int d);
/// 1/|N| on the dual basis elements indexed by N = <g^d>, on the dual group algebra.
ActionFamily dual_group_partial_action(int n, int d);
/// (1/|N|) sum of N = <g^d> in the group algebra.
CoactionFamily group_partial_coaction(int n, int d);
/// Sum of the dual basis elements indexed by N = <g^d> in the dual group algebra.
CoactionFamily dual_group_partial_coaction(int n, int d);

/// Every family the library knows for a built-in algebra, in a fixed order.
std::vector<ActionFamily> known_actions(const HopfPtr& H);
std::vector<CoactionFamily> known_coactions(const HopfPtr& H);

/// Closed forms for lambda_alpha on T_n(q), compared symbolically:
/// (i) lambda(x^j) = alpha^j, (ii) lambda(g^(n-i) x^i) = (-1)^i q^(i(i+1)/2) alpha^i,
/// (iii) lambda(g^(n-1) x^j) = -q (j)_q alpha^j, (iv) lambda(g^i x^(n-1)) = alpha^(n-1).
Report special_value_checks(int n);

/// For group-likes g, t and a (g,t)-skew-primitive x:
/// lambda(g) = 1 implies lambda(g u) = lambda(u) for all u;
/// lambda(g) = lambda(t) implies lambda(x) = 0;
/// lambda(x) = 0 and lambda(t) = 1 imply lambda(x u) = 0 for all u.
/// Premises are tested as polynomial identities.
Report shift_rule_checks(const Functional& lambda);

/// lambda * lambda = lambda in the convolution algebra.
Report convolution_idempotence(const Functional& lambda);

/// Divisors of n in increasing order.
std::vector<int> divisors(int n);

}  // namespace partial_hopf
