#include <gtest/gtest.h>

#include "partial_hopf/algebras.hpp"
#include "partial_hopf/errors.hpp"

namespace ph = partial_hopf;

TEST(Algebras, DimensionsAndLabels) {
  auto T = ph::taft(4);
  EXPECT_EQ(T->dim, 16U);
  EXPECT_EQ(T->name, "taft(4)");
  EXPECT_EQ(T->basis[1 * 4 + 2], "gx^2");
  EXPECT_EQ(T->basis[3 * 4 + 0], "g^3");
  EXPECT_EQ(ph::taft(4), T);  // cached

  auto N = ph::nichols(3);
  EXPECT_EQ(N->dim, 8U);
  EXPECT_EQ(N->basis[0b111], "gx1x2");
  EXPECT_EQ(N->basis[0b010], "x1");

  EXPECT_EQ(ph::group_algebra_cyclic(6)->dim, 6U);
  EXPECT_EQ(ph::dual_group_algebra_cyclic(6)->grouplikes.size(), 6U);
}

TEST(Algebras, InvalidOrders) {
  EXPECT_THROW(ph::taft(1), ph::InvalidOrder);
  EXPECT_THROW(ph::nichols(0), ph::InvalidOrder);
}

TEST(Algebras, TaftCoproductMatchesGeneratorPowers) {
  for (int n = 2; n <= 6; ++n) EXPECT_TRUE(ph::taft_comultiplication_crosscheck(n).ok()) << n;
}

TEST(Algebras, NicholsMonomialSigns) {
  // x1 x2 = -x2 x1, x1 x1 = 0, x1 g = -g x1
  auto [s12, r12] = ph::nichols_monomial_product(0b010, 0b100);
  auto [s21, r21] = ph::nichols_monomial_product(0b100, 0b010);
  EXPECT_EQ(r12, r21);
  EXPECT_EQ(s12, -s21);
  EXPECT_EQ(ph::nichols_monomial_product(0b010, 0b010).first, 0);
  auto [sxg, rxg] = ph::nichols_monomial_product(0b010, 0b001);
  EXPECT_EQ(rxg, 0b011U);
  EXPECT_EQ(sxg, -1);
}

TEST(Algebras, AllBuiltinsValidate) {
  for (int n = 2; n <= 5; ++n) {
    EXPECT_TRUE(ph::validate_all(*ph::taft(n)).ok()) << n;
    EXPECT_TRUE(ph::validate_all(*ph::nichols(n)).ok()) << n;
    EXPECT_TRUE(ph::validate_all(*ph::group_algebra_cyclic(n)).ok()) << n;
    EXPECT_TRUE(ph::validate_all(*ph::dual_group_algebra_cyclic(n)).ok()) << n;
  }
}

TEST(Algebras, NicholsTwoIsSweedler) {
  // nichols basis b = (j0, j1) maps to taft index j0*2 + j1.
  auto N = ph::nichols(2);
  auto T = ph::taft(2);
  auto map = [](std::size_t b) { return (b & 1U) * 2 + (b >> 1); };
  auto remap = [&](const ph::SparseVec& v) {
    ph::SparseVec out;
    for (const auto& [k, c] : v) out.emplace_back(map(k), c);
    return ph::normalize_sparse(out);
  };
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      // Nichols scalars live in Q; compare through the rational parts.
      ph::SparseVec lhs = remap(N->product(a, b)), rhs = T->product(map(a), map(b));
      ASSERT_EQ(lhs.size(), rhs.size());
      for (std::size_t t = 0; t < lhs.size(); ++t) {
        EXPECT_EQ(lhs[t].first, rhs[t].first);
        EXPECT_EQ(lhs[t].second.rational_part(), rhs[t].second.rational_part());
      }
    }
  }
}
