#include <gtest/gtest.h>

#include "partial_hopf/algebras.hpp"
#include "partial_hopf/errors.hpp"
#include "partial_hopf/hopf.hpp"
#include "partial_hopf/partial.hpp"

namespace ph = partial_hopf;
using ph::AlgElement;
using ph::CycNumber;
using ph::Functional;
using ph::ParamPoly;

namespace {

AlgElement el(const ph::HopfPtr& H, const char* label) { return AlgElement::basis(H, H->index_of(label)); }

bool mentions(const ph::Report& r, const std::string& needle) {
  for (const auto& f : r.failures)
    if (f.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(HopfCore, UnitLaw) {
  auto H = ph::taft(3);
  for (std::size_t i = 0; i < H->dim; ++i) {
    auto a = AlgElement::basis(H, i);
    EXPECT_EQ(ph::multiply(AlgElement::unit(H), a), a);
    EXPECT_EQ(ph::multiply(a, AlgElement::unit(H)), a);
  }
}

TEST(HopfCore, TaftCommutationRule) {
  auto H = ph::taft(3);
  AlgElement qgx = el(H, "gx");
  qgx *= ParamPoly(ph::zeta_pow(3, 1));
  EXPECT_EQ(ph::multiply(el(H, "x"), el(H, "g")), qgx);
}

TEST(HopfCore, CounitOnTaftBasis) {
  auto H = ph::taft(4);
  const Functional eps = Functional::counit(H);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto v = ph::apply(eps, AlgElement::basis(H, H->index_of(ph::taft_label(i, j))));
      EXPECT_EQ(v, ParamPoly(4, j == 0 ? 1L : 0L)) << i << " " << j;
    }
}

TEST(HopfCore, OperandsMustShareTheAlgebra) {
  EXPECT_THROW(ph::multiply(AlgElement::unit(ph::taft(3)), AlgElement::unit(ph::taft(4))), ph::AlgebraMismatch);
  EXPECT_THROW(ph::convolution(Functional::counit(ph::taft(2)), Functional::counit(ph::nichols(2))), ph::AlgebraMismatch);
}

TEST(HopfCore, ValidatorsPassOnBuiltins) {
  for (auto H : {ph::taft(2), ph::taft(3), ph::nichols(3), ph::group_algebra_cyclic(5), ph::dual_group_algebra_cyclic(4)}) {
    EXPECT_TRUE(ph::validate_bialgebra(*H).ok()) << H->name;
    EXPECT_TRUE(ph::validate_antipode(*H).ok()) << H->name;
    EXPECT_TRUE(ph::validate_metadata(*H).ok()) << H->name;
  }
}

TEST(HopfCore, TaftSweepCoversAllTriples) {
  const auto r = ph::validate_bialgebra(*ph::taft(3));
  EXPECT_TRUE(r.ok());
  EXPECT_GE(r.checked, 9U * 9U * 9U);
}

TEST(HopfCore, CorruptedMultiplicationIsNamed) {
  ph::HopfData H = *ph::taft(3);
  const std::size_t x = H.index_of("x"), g = H.index_of("g");
  auto& entry = H.mult[x * H.dim + g];
  ASSERT_EQ(entry.size(), 1U);
  entry[0].second = entry[0].second * ph::Rational(2);
  const auto r = ph::validate_bialgebra(H);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(mentions(r, "(i,j,k) = ")) << (r.failures.empty() ? "" : r.failures[0]);
}

TEST(HopfCore, IdentityAntipodeFailsOnX) {
  ph::HopfData H = *ph::taft(4);
  for (std::size_t i = 0; i < H.dim; ++i) H.antipode[i] = ph::basis_vector(H, i);
  EXPECT_TRUE(ph::validate_bialgebra(H).ok());
  const auto r = ph::validate_antipode(H);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(mentions(r, "x"));
}

TEST(HopfCore, SweedlerAntipode) {
  auto H = ph::taft(2);
  AlgElement expected = el(H, "gx");
  expected *= ParamPoly(2, -1L);
  EXPECT_EQ(ph::antipode_apply(el(H, "x")), expected);
}

TEST(HopfCore, CyclicGroupAntipode) {
  auto H = ph::group_algebra_cyclic(5);
  EXPECT_EQ(ph::antipode_apply(el(H, "g")), el(H, "g^4"));
}

TEST(Convolution, CounitIsTheUnit) {
  for (auto H : {ph::taft(3), ph::nichols(3)}) {
    const auto lam = ph::known_actions(H).back().functional;
    EXPECT_EQ(ph::convolution(Functional::counit(H), lam), lam);
    EXPECT_EQ(ph::convolution(lam, Functional::counit(H)), lam);
  }
}

TEST(Convolution, SweedlerFamilyIsIdempotent) {
  const auto lam = ph::taft_lambda_alpha(2).functional;
  EXPECT_EQ(ph::convolution(lam, lam), lam);
}

TEST(Convolution, DualBasisOfTheIdentityInTheGroupAlgebra) {
  auto H = ph::group_algebra_cyclic(2);
  const auto one_star = Functional::dual_basis(H, H->index_of("1"));
  EXPECT_EQ(ph::convolution(one_star, one_star), one_star);
}

TEST(Duals, DualsAreHopfAlgebras) {
  for (auto H : {ph::taft(3), ph::nichols(3), ph::group_algebra_cyclic(6)}) {
    const ph::HopfData D = ph::dual_hopf(*H);
    EXPECT_EQ(D.basis.front(), "(" + H->basis.front() + ")*");
    EXPECT_TRUE(ph::validate_bialgebra(D).ok()) << H->name;
    EXPECT_TRUE(ph::validate_antipode(D).ok()) << H->name;
  }
}

TEST(Duals, DoubleDualMatchesStructureConstants) {
  const auto& H = *ph::taft(3);
  const ph::HopfData DD = ph::dual_hopf(ph::dual_hopf(H));
  EXPECT_EQ(DD.mult, H.mult);
  EXPECT_EQ(DD.counit, H.counit);
  EXPECT_EQ(DD.antipode, H.antipode);
}
