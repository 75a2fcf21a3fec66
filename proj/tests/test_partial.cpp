#include <gtest/gtest.h>

#include "partial_hopf/algebras.hpp"
#include "partial_hopf/errors.hpp"
#include "partial_hopf/expression.hpp"
#include "partial_hopf/partial.hpp"

namespace ph = partial_hopf;
using ph::AlgElement;
using ph::CycNumber;
using ph::Functional;
using ph::ParamPoly;

namespace {

ParamPoly expr(const char* text, int order) {
  ph::ExpressionSymbols s;
  s.root_names = {"q", "w"};
  return ph::parse_expression(text, order, s);
}

const ParamPoly& at(const ph::ActionFamily& f, const char* label) { return f.functional.coords[f.algebra->index_of(label)]; }
const ParamPoly& at(const ph::CoactionFamily& f, const char* label) { return f.element.coords[f.algebra->index_of(label)]; }

}  // namespace

TEST(PartialActions, CounitIsGlobal) {
  for (int n = 2; n <= 5; ++n) {
    const auto eps = Functional::counit(ph::taft(n));
    EXPECT_TRUE(ph::verify_partial_action(eps).ok());
    EXPECT_TRUE(ph::verify_symmetric_action(eps).ok());
  }
  EXPECT_TRUE(ph::verify_symmetric_action(Functional::counit(ph::nichols(4))).ok());
}

TEST(PartialActions, TaftThreeFamilyVerifiesSymbolically) {
  const auto f = ph::taft_lambda_alpha(3);
  ASSERT_EQ(f.params, std::vector<std::string>{"alpha"});
  EXPECT_TRUE(ph::verify_partial_action(f.functional).ok());
  EXPECT_TRUE(ph::verify_symmetric_action(f.functional).ok());
}

TEST(PartialActions, NonSubgroupSupportIsRejected) {
  auto H = ph::taft(4);
  Functional lam = Functional::zero(H);
  lam.coords[H->index_of("1")] = ParamPoly(4, 1L);
  lam.coords[H->index_of("g")] = ParamPoly(4, 1L);
  const auto r = ph::verify_partial_action(lam);
  EXPECT_FALSE(r.ok());
  ASSERT_FALSE(r.failures.empty());
  EXPECT_NE(r.failures[0].find(" at "), std::string::npos);
}

TEST(PartialActions, LambdaAlphaValues) {
  const auto t3 = ph::taft_lambda_alpha(3);
  EXPECT_EQ(at(t3, "g^2x"), expr("-q*alpha", 3));
  const auto t4 = ph::taft_lambda_alpha(4);
  EXPECT_EQ(at(t4, "g^3x^2"), expr("(1-w)*alpha^2", 4));
  for (int n = 2; n <= 7; ++n) {
    const auto f = ph::taft_lambda_alpha(n);
    const ParamPoly a = ParamPoly::variable(n, ph::kTaftParam);
    for (int j = 0; j < n; ++j) EXPECT_EQ(at(f, ph::taft_label(0, j).c_str()), a.pow(j)) << n << " " << j;
    for (int i = 0; i < n; ++i) EXPECT_EQ(at(f, ph::taft_label(i, n - 1).c_str()), a.pow(n - 1)) << n << " " << i;
  }
}

TEST(PartialActions, SubgroupFamilies) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(ph::taft_lambda_N0(n, 1).functional, Functional::counit(ph::taft(n))) << n;
    auto zero_alpha = ph::taft_lambda_alpha(n).functional;
    for (auto& c : zero_alpha.coords) c = c.substitute(ph::intern_variable(ph::kTaftParam), ParamPoly(n));
    EXPECT_EQ(ph::taft_lambda_N0(n, n).functional, zero_alpha) << n;
  }
  const auto f = ph::taft_lambda_N0(4, 2);
  EXPECT_TRUE(f.params.empty());
  EXPECT_EQ(at(f, "g^2"), ParamPoly(4, 1L));
  EXPECT_TRUE(at(f, "g").is_zero());
  EXPECT_TRUE(at(f, "g^3").is_zero());
  for (int i = 0; i < 4; ++i)
    for (int j = 1; j < 4; ++j) EXPECT_TRUE(at(f, ph::taft_label(i, j).c_str()).is_zero());
  EXPECT_THROW(ph::taft_lambda_N0(4, 3), ph::NotADivisor);
  EXPECT_THROW(ph::taft_lambda_alpha(1), ph::InvalidOrder);
}

TEST(PartialActions, NicholsFamily) {
  const auto f = ph::nichols_lambda_alpha(3);
  EXPECT_EQ(f.params.size(), 2U);
  EXPECT_TRUE(at(f, "x1x2").is_zero());
  EXPECT_TRUE(at(f, "gx1x2").is_zero());
  for (int i = 1; i <= 2; ++i) {
    const ParamPoly a = ParamPoly::variable(2, ph::nichols_param(i));
    EXPECT_EQ(at(f, ("x" + std::to_string(i)).c_str()), a);
    EXPECT_EQ(at(f, ("gx" + std::to_string(i)).c_str()), a);
  }
  for (int n = 2; n <= 5; ++n) {
    const auto g = ph::nichols_lambda_alpha(n);
    EXPECT_TRUE(ph::verify_partial_action(g.functional).ok()) << n;
    EXPECT_TRUE(ph::verify_symmetric_action(g.functional).ok()) << n;
  }
}

TEST(PartialActions, GroupAlgebraFamilies) {
  EXPECT_EQ(ph::group_partial_action(6, 1).functional, Functional::counit(ph::group_algebra_cyclic(6)));
  const auto f = ph::group_partial_action(6, 2);
  for (int k = 0; k < 6; ++k) {
    const std::string label = ph::taft_label(k, 0);
    EXPECT_EQ(at(f, label.c_str()), ParamPoly(6, k % 2 == 0 ? 1L : 0L)) << k;
  }
  const auto d = ph::dual_group_partial_action(4, 2);
  EXPECT_EQ(at(d, "(1)*"), ParamPoly(CycNumber(4, ph::Rational(1, 2))));
  EXPECT_EQ(at(d, "(g^2)*"), ParamPoly(CycNumber(4, ph::Rational(1, 2))));
  EXPECT_TRUE(at(d, "(g)*").is_zero());
  EXPECT_TRUE(ph::verify_partial_action(d.functional).ok());
  EXPECT_THROW(ph::group_partial_action(6, 4), ph::NotADivisor);
}

TEST(PartialCoactions, Oracles) {
  EXPECT_TRUE(ph::verify_partial_coaction(AlgElement::unit(ph::taft(3))).ok());
  const auto z2 = ph::taft_z_alpha(2);
  EXPECT_EQ(at(z2, "1"), expr("1/2", 2));
  EXPECT_EQ(at(z2, "g"), expr("1/2", 2));
  EXPECT_EQ(at(z2, "gx"), expr("-alpha", 2));
  EXPECT_TRUE(ph::verify_partial_coaction(z2.element).ok());
  EXPECT_TRUE(ph::verify_symmetric_coaction(z2.element).ok());

  EXPECT_EQ(at(ph::taft_z_alpha(3), "gx"), expr("(q-1)*alpha/3", 3));
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(ph::taft_z_N(n, n).element, AlgElement::unit(ph::taft(n)));

  const auto z6 = ph::group_partial_coaction(6, 2);
  EXPECT_EQ(at(z6, "g^4"), expr("1/3", 6));
  EXPECT_TRUE(ph::verify_partial_coaction(z6.element).ok());
  EXPECT_TRUE(ph::verify_symmetric_coaction(z6.element).ok());

  const auto nz = ph::nichols_z_alpha(3);
  EXPECT_EQ(at(nz, "gx2"), -ParamPoly::variable(2, ph::nichols_param(2)));
  EXPECT_TRUE(ph::verify_partial_coaction(nz.element).ok());
}

TEST(PartialCoactions, NonIdempotentIsRejected) {
  auto H = ph::taft(3);
  AlgElement z = AlgElement::unit(H);
  z.coords[H->index_of("g")] = ParamPoly(3, 1L);
  EXPECT_FALSE(ph::verify_partial_coaction(z).ok());
}

TEST(PartialActions, SpecialValues) {
  for (int n = 2; n <= 8; ++n) EXPECT_TRUE(ph::special_value_checks(n).ok()) << n;
  const auto f = ph::taft_lambda_alpha(3);
  EXPECT_EQ(at(f, "g^2x^2"), ParamPoly::variable(3, ph::kTaftParam).pow(2));
}

TEST(PartialActions, NicholsTwoMatchesSweedler) {
  const auto n = ph::nichols_lambda_alpha(2).functional.coords;
  const auto t = ph::taft_lambda_alpha(2).functional.coords;
  for (std::size_t b = 0; b < 4; ++b)
    EXPECT_EQ(n[b].rename({{ph::nichols_param(1), ph::kTaftParam}}), t[(b & 1U) * 2 + (b >> 1)]) << b;
}

// Invariants over every built-in family.
struct AlgebraCase {
  const char* kind;
  int n;
  ph::HopfPtr get() const {
    const std::string k = kind;
    if (k == "taft") return ph::taft(n);
    if (k == "nichols") return ph::nichols(n);
    if (k == "groupalg") return ph::group_algebra_cyclic(n);
    return ph::dual_group_algebra_cyclic(n);
  }
};

void PrintTo(const AlgebraCase& c, std::ostream* os) { *os << c.kind << c.n; }

class BuiltinFamilies : public ::testing::TestWithParam<AlgebraCase> {};

TEST_P(BuiltinFamilies, ActionsAreIdempotentAndRespectShiftRules) {
  for (const auto& f : ph::known_actions(GetParam().get())) {
    EXPECT_TRUE(ph::verify_partial_action(f.functional).ok()) << f.name;
    EXPECT_TRUE(ph::verify_symmetric_action(f.functional).ok()) << f.name;
    EXPECT_TRUE(ph::convolution_idempotence(f.functional).ok()) << f.name;
    EXPECT_TRUE(ph::shift_rule_checks(f.functional).ok()) << f.name;
  }
}

TEST_P(BuiltinFamilies, CoactionsAreIdempotent) {
  for (const auto& f : ph::known_coactions(GetParam().get())) {
    EXPECT_TRUE(ph::verify_partial_coaction(f.element).ok()) << f.name;
    EXPECT_TRUE(ph::verify_symmetric_coaction(f.element).ok()) << f.name;
  }
}

INSTANTIATE_TEST_SUITE_P(All, BuiltinFamilies,
                         ::testing::Values(AlgebraCase{"taft", 2}, AlgebraCase{"taft", 3}, AlgebraCase{"taft", 4},
                                           AlgebraCase{"taft", 6}, AlgebraCase{"nichols", 2}, AlgebraCase{"nichols", 3},
                                           AlgebraCase{"nichols", 4}, AlgebraCase{"groupalg", 6}, AlgebraCase{"dualgroupalg", 6}),
                         [](const auto& info) { return std::string(info.param.kind) + std::to_string(info.param.n); });

TEST(PartialActions, TaftRestrictionToGrouplikesIsASubgroupIndicator) {
  for (int n = 2; n <= 6; ++n) {
    auto H = ph::taft(n);
    for (const auto& f : ph::known_actions(H)) {
      std::vector<ParamPoly> restricted;
      for (int k = 0; k < n; ++k) restricted.push_back(f.functional.coords[H->index_of(ph::taft_label(k, 0))]);
      bool matched = false;
      for (int d : ph::divisors(n)) matched = matched || ph::group_partial_action(n, d).functional.coords == restricted;
      EXPECT_TRUE(matched) << n << " " << f.name;
    }
  }
}
