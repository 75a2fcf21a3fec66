#include <gtest/gtest.h>

#include "partial_hopf/algebras.hpp"
#include "partial_hopf/duality.hpp"
#include "partial_hopf/errors.hpp"
#include "partial_hopf/partial.hpp"

namespace ph = partial_hopf;
using ph::CycNumber;
using ph::ParamPoly;

TEST(Matrix, InverseAndIdentity) {
  ph::Matrix m(2, 2, 3);
  m.at(0, 0) = CycNumber(3, 1L);
  m.at(0, 1) = ph::zeta_pow(3, 1);
  m.at(1, 1) = CycNumber(3, 2L);
  EXPECT_TRUE((m * m.inverse()).is_identity());
  ph::Matrix s(2, 2, 3);
  s.at(0, 0) = CycNumber(3, 1L);
  EXPECT_THROW(s.inverse(), ph::PreconditionViolated);
}

class TaftDuality : public ::testing::TestWithParam<int> {};

TEST_P(TaftDuality, MorphismsAreMutuallyInverseHopfMaps) {
  const int n = GetParam();
  const auto psi = ph::taft_psi(n), phi = ph::taft_phi(n);
  EXPECT_TRUE(ph::check_algebra_map(psi).ok());
  EXPECT_TRUE(ph::check_coalgebra_map(psi).ok());
  EXPECT_TRUE(ph::check_algebra_map(phi).ok());
  EXPECT_TRUE(ph::check_coalgebra_map(phi).ok());
  EXPECT_TRUE(ph::compose(phi, psi).matrix.is_identity());
  EXPECT_TRUE(ph::compose(psi, phi).matrix.is_identity());
}

TEST_P(TaftDuality, PsiOfTheUnitIsTheSumOverGrouplikeDuals) {
  const int n = GetParam();
  const auto psi = ph::taft_psi(n);
  const auto T = ph::taft(n);
  ph::SparseVec expected;
  for (int k = 0; k < n; ++k) expected.emplace_back(T->index_of(ph::taft_label(k, 0)), CycNumber(n, 1L));
  EXPECT_EQ(psi.image(T->index_of("1")), ph::normalize_sparse(expected));
}

TEST_P(TaftDuality, PhiOnGrouplikeDuals) {
  const int n = GetParam();
  const auto phi = ph::taft_phi(n);
  const auto T = ph::taft(n);
  for (int i = 0; i < n; ++i) {
    ph::SparseVec expected;
    for (int k = 0; k < n; ++k)
      expected.emplace_back(T->index_of(ph::taft_label(k, 0)), ph::zeta_pow(n, static_cast<long>(k) * i) * ph::Rational(1, n));
    EXPECT_EQ(phi.image(T->index_of(ph::taft_label(i, 0))), ph::normalize_sparse(expected)) << i;
  }
}

TEST_P(TaftDuality, TransportGivesTheCoactionFamilies) {
  const int n = GetParam();
  const auto phi = ph::taft_phi(n), psi = ph::taft_psi(n);
  const auto eps = ph::transport(ph::counit_action(ph::taft(n)), phi);
  EXPECT_EQ(eps.family.element, ph::AlgElement::unit(ph::taft(n)));

  for (const auto& iso : {phi, psi}) {
    const auto t = ph::transport(ph::taft_lambda_alpha(n), iso);
    EXPECT_EQ(t.family.element, ph::taft_z_alpha(n).element);
    EXPECT_TRUE(t.partial.ok());
    EXPECT_TRUE(t.symmetric.ok());
  }
  for (int k : ph::divisors(n)) {
    const auto t = ph::transport(ph::taft_lambda_N0(n, k), phi);
    EXPECT_EQ(t.family.element, ph::taft_z_N(n, n / k).element) << k;
  }
}

TEST_P(TaftDuality, RoundTripThroughPsiRecoversTheFunctional) {
  const int n = GetParam();
  const auto phi = ph::taft_phi(n), psi = ph::taft_psi(n);
  for (const auto& f : ph::known_actions(ph::taft(n))) {
    const auto z = ph::transport(f, phi).family.element;
    EXPECT_EQ(ph::push_forward(psi, z.coords), f.functional.coords) << f.name;
  }
}

INSTANTIATE_TEST_SUITE_P(N, TaftDuality, ::testing::Range(2, 7));

class NicholsDuality : public ::testing::TestWithParam<int> {};

TEST_P(NicholsDuality, PsiIsAnInvertibleHopfMap) {
  const int n = GetParam();
  const auto psi = ph::nichols_psi(n);
  EXPECT_TRUE(ph::check_algebra_map(psi).ok());
  EXPECT_TRUE(ph::check_coalgebra_map(psi).ok());
  EXPECT_NO_THROW(psi.matrix.inverse());
}

TEST_P(NicholsDuality, TransportGivesZAlpha) {
  const int n = GetParam();
  const auto t = ph::transport(ph::nichols_lambda_alpha(n), ph::nichols_psi(n));
  EXPECT_EQ(t.family.element, ph::nichols_z_alpha(n).element);
  EXPECT_TRUE(t.partial.ok());
  EXPECT_TRUE(t.symmetric.ok());
}

INSTANTIATE_TEST_SUITE_P(N, NicholsDuality, ::testing::Range(2, 6));

TEST(NicholsDuality, PsiOfTheAveragedGrouplikeIsTheUnitDual) {
  const auto psi = ph::nichols_psi(3);
  const auto N = ph::nichols(3);
  std::vector<ParamPoly> v(N->dim, ParamPoly(2));
  v[N->index_of("1")] = ParamPoly(CycNumber(2, ph::Rational(1, 2)));
  v[N->index_of("g")] = ParamPoly(CycNumber(2, ph::Rational(1, 2)));
  std::vector<ParamPoly> expected(N->dim, ParamPoly(2));
  expected[0] = ParamPoly(2, 1L);
  EXPECT_EQ(ph::push_forward(psi, v), expected);
}

TEST(NicholsDuality, PsiOfGSquaredIsTheCounit) {
  const auto psi = ph::nichols_psi(3);
  const auto D = psi.target;
  const auto g = psi.image(ph::nichols(3)->index_of("g"));
  ph::SparseVec sq = ph::multiply_numeric(*D, g, g);
  EXPECT_EQ(sq, D->unit);
}

TEST(Duality, TransportRejectsForeignMorphisms) {
  EXPECT_THROW(ph::transport(ph::taft_lambda_alpha(3), ph::taft_phi(4)), ph::AlgebraMismatch);
}

TEST(SubgroupAverage, Oracles) {
  EXPECT_TRUE(ph::check_subgroup_average(4, 2, 2).ok());
  EXPECT_TRUE(ph::check_subgroup_average(5, 5, 1).ok());
  EXPECT_TRUE(ph::check_subgroup_average(6, 2, 3).ok());
  EXPECT_THROW(ph::check_subgroup_average(6, 4, 2), ph::PreconditionViolated);
  for (int n = 2; n <= 12; ++n)
    for (int k : ph::divisors(n)) EXPECT_TRUE(ph::check_subgroup_average(n, k, n / k).ok()) << n << " " << k;
}
