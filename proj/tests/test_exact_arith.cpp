#include <gtest/gtest.h>

#include "partial_hopf/cyclotomic.hpp"
#include "partial_hopf/errors.hpp"
#include "partial_hopf/expression.hpp"
#include "partial_hopf/param_poly.hpp"
#include "partial_hopf/rational.hpp"

namespace ph = partial_hopf;
using ph::CycNumber;
using ph::ParamPoly;
using ph::Rational;

namespace {

ph::IntPoly poly(std::initializer_list<long> c) {
  ph::IntPoly p;
  for (long v : c) p.coeffs.emplace_back(v);
  return p;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(ph::to_string(ph::make_rational(4, -6)), "-2/3");
  EXPECT_EQ(ph::parse_rational("10/4"), Rational(5, 2));
  EXPECT_THROW(ph::make_rational(1, 0), ph::DivisionByZero);
  EXPECT_THROW(ph::parse_rational("1/x"), ph::ParseError);
}

TEST(Cyclotomic, PolynomialsOfSmallOrders) {
  EXPECT_EQ(ph::cyclotomic_polynomial(1), poly({-1, 1}));
  EXPECT_EQ(ph::cyclotomic_polynomial(4), poly({1, 0, 1}));
  EXPECT_EQ(ph::cyclotomic_polynomial(6), poly({1, -1, 1}));
  EXPECT_EQ(ph::cyclotomic_polynomial(12), poly({1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, DegreeIsEulerPhi) {
  for (int n = 1; n <= 40; ++n) EXPECT_EQ(ph::cyclotomic_polynomial(n).degree(), ph::euler_phi(n)) << n;
}

TEST(Cyclotomic, RootPowers) {
  EXPECT_EQ(ph::zeta_pow(4, 2), CycNumber(4, -1L));
  EXPECT_EQ(ph::zeta_pow(3, 3), CycNumber(3, 1L));
  EXPECT_EQ(ph::zeta_pow(3, -1), CycNumber(3, -1L) - ph::zeta_pow(3, 1));
}

TEST(Cyclotomic, RootsAreRootsOfTheirPolynomial) {
  for (int n = 1; n <= 24; ++n) {
    const auto phi = ph::cyclotomic_polynomial(n);
    CycNumber sum(n);
    for (int k = 0; k <= phi.degree(); ++k) sum += ph::zeta_pow(n, k) * Rational(phi.coeffs[k]);
    EXPECT_TRUE(sum.is_zero()) << n;
  }
}

TEST(Cyclotomic, Inverses) {
  EXPECT_EQ(ph::cyc_invert(CycNumber(5, 1L)), CycNumber(5, 1L));
  const CycNumber a = CycNumber(3, 1L) + ph::zeta_pow(3, 1);
  EXPECT_EQ(ph::cyc_invert(a), -ph::zeta_pow(3, 1));
  EXPECT_EQ(ph::cyc_invert(CycNumber(4, 2L)), CycNumber(4, Rational(1, 2)));
  EXPECT_THROW(ph::cyc_invert(CycNumber(4)), ph::DivisionByZero);
}

TEST(Cyclotomic, InverseRoundTripOverSeveralFields) {
  for (int n : {3, 5, 7, 8, 9, 12}) {
    for (int k = 1; k < n; ++k) {
      CycNumber a = CycNumber(n, 2L) + ph::zeta_pow(n, k) * Rational(3, 5);
      EXPECT_EQ(a * ph::cyc_invert(a), CycNumber(n, 1L)) << n << " " << k;
    }
  }
}

TEST(Cyclotomic, MixedOrdersAreRejected) {
  EXPECT_THROW(CycNumber(3, 1L) + CycNumber(4, 1L), ph::OrderMismatch);
}

TEST(Cyclotomic, TextRoundTrip) {
  const CycNumber a = CycNumber(8, Rational(1, 2)) + ph::zeta_pow(8, 3) * Rational(-7, 3);
  EXPECT_EQ(ph::parse_scalar(a.to_string(), 8), a);
}

TEST(ParamPoly, Basics) {
  const ParamPoly a = ParamPoly::variable(1, "alpha");
  const ParamPoly one(1, 1L);
  EXPECT_TRUE(ph::poly_is_zero((a + one) - (a + one)));

  const ParamPoly a4 = ParamPoly::variable(4, "alpha");
  EXPECT_EQ(ph::poly_eval(a4 * a4, {{"alpha", ph::zeta_pow(4, 1)}}), CycNumber(4, -1L));

  const ParamPoly a1 = ParamPoly::variable(1, "alpha1"), a2 = ParamPoly::variable(1, "alpha2");
  const ParamPoly prod = (a1 * a2) * a1;
  EXPECT_EQ(prod, a1.pow(2) * a2);
  EXPECT_EQ(prod.total_degree(), 3U);
  EXPECT_EQ(prod.degree_in(ph::intern_variable("alpha1")), 2U);
}

TEST(ParamPoly, SubstituteAndFactor) {
  const ParamPoly u = ParamPoly::variable(3, "u"), v = ParamPoly::variable(3, "v");
  const ParamPoly p = u * v + u * u;
  const auto uid = ph::intern_variable("u");
  EXPECT_EQ(p.common_variable_factors(), std::vector<ph::VarId>{uid});
  EXPECT_EQ(p.divide_by_variable(uid), v + u);
  EXPECT_EQ(p.substitute(uid, ParamPoly(3, 2L)), ParamPoly(3, 2L) * v + ParamPoly(3, 4L));
  EXPECT_EQ(p.coefficient_of(uid, 1), v);
  EXPECT_EQ(p.rename({{"u", "w"}}), ParamPoly::variable(3, "w") * v + ParamPoly::variable(3, "w").pow(2));
}

TEST(ParamPoly, ExpressionRoundTrip) {
  ph::ExpressionSymbols sym;
  sym.root_names = {"w", "z"};
  const ParamPoly p = ph::parse_expression("(1-w)*b^2 + 3*b/4 - w^3", 4, sym);
  EXPECT_EQ(ph::parse_expression(p.to_string("z"), 4), p);
  EXPECT_THROW(ph::parse_expression("b/(b+1)", 4), ph::ParseError);
  EXPECT_THROW(ph::parse_expression("1/0", 4), ph::Error);
}
