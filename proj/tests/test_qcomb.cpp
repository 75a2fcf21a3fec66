#include <gtest/gtest.h>

#include <array>

#include "partial_hopf/errors.hpp"
#include "partial_hopf/parallel.hpp"
#include "partial_hopf/qcomb.hpp"

namespace ph = partial_hopf;
using ph::QScalar;

namespace {

QScalar root(int n) { return QScalar::concrete(ph::zeta_pow(n, 1)); }
QScalar rational(long p, long q = 1) { return QScalar::concrete(ph::CycNumber(1, ph::Rational(p, q))); }
QScalar generic() { return QScalar::generic(); }

}  // namespace

TEST(QNumbers, Oracles) {
  EXPECT_TRUE(ph::q_number(0, generic()).is_zero());
  EXPECT_TRUE(ph::q_number(0, root(5)).is_zero());
  EXPECT_TRUE(ph::q_number(3, root(3)).is_zero());
  const QScalar q = generic();
  EXPECT_EQ(ph::q_number(2, q), q.one() + q);
  EXPECT_EQ(ph::q_number(3, rational(2)), rational(7));
}

TEST(QFactorials, Oracles) {
  EXPECT_EQ(ph::q_factorial(0, generic()), generic().one());
  EXPECT_EQ(ph::q_factorial(0, root(3)), root(3).one());
  EXPECT_TRUE(ph::q_factorial(3, root(3)).is_zero());
  EXPECT_EQ(ph::q_factorial(2, root(4)), root(4).one() + root(4));
}

TEST(QFactorials, NonzeroBelowTheOrder) {
  for (int n = 2; n <= 8; ++n) {
    EXPECT_FALSE(ph::q_factorial(n - 1, root(n)).is_zero()) << n;
    EXPECT_TRUE(ph::q_factorial(n, root(n)).is_zero()) << n;
  }
}

TEST(QBinomials, Oracles) {
  for (long m = 0; m <= 6; ++m) EXPECT_EQ(ph::q_binomial(m, 0, root(5)), root(5).one());
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) EXPECT_TRUE(ph::q_binomial(n, k, root(n)).is_zero()) << n << " " << k;
  EXPECT_EQ(ph::q_binomial(2, 1, generic()), generic().one() + generic());
  EXPECT_TRUE(ph::q_binomial(3, 5, generic()).is_zero());
  EXPECT_TRUE(ph::q_binomial(3, -1, generic()).is_zero());
  EXPECT_TRUE(ph::q_binomial(-1, 0, generic()).is_zero());
}

TEST(QBinomials, SymmetricInTheLowerIndex) {
  const QScalar q = generic();
  for (long m = 0; m <= 10; ++m)
    for (long l = -2; l <= m + 2; ++l) EXPECT_EQ(ph::q_binomial(m, l, q), ph::q_binomial(m, m - l, q)) << m << " " << l;
}

TEST(QBinomials, AgreeWithTheQuotientWhereItExists) {
  // Checked at rational points and roots of unity by clearing denominators:
  // C(m,k) * k! * (m-k)! == m!
  std::vector<QScalar> points{rational(2), rational(5, 7), root(5), root(7), root(8)};
  for (const auto& q : points) {
    ph::QCombinatorics qc(q);
    for (long m = 0; m <= 9; ++m) {
      if (qc.factorial(m).is_zero()) continue;
      for (long k = 0; k <= m; ++k)
        EXPECT_EQ(qc.binomial(m, k) * qc.factorial(k) * qc.factorial(m - k), qc.factorial(m)) << q.label() << " " << m << " " << k;
    }
  }
}

TEST(Pascal, Oracles) {
  EXPECT_TRUE(ph::check_pascal(ph::PascalForm::kStandard, 1, 0, generic()).pass);
  EXPECT_TRUE(ph::check_pascal(ph::PascalForm::kStandard, 4, 2, root(4)).pass);
  const auto v = ph::check_pascal(ph::PascalForm::kReflected, 3, 5, generic());
  EXPECT_TRUE(v.pass);
  EXPECT_TRUE(v.lhs.is_zero());
  EXPECT_TRUE(v.rhs.is_zero());
}

TEST(Identities, Oracles) {
  const std::array<long, 3> a{0, 5, 2};
  const auto v = ph::check_identity(ph::QIdentity::kAlternatingSum, a, generic());
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.rhs, ph::q_binomial(5, 2, generic()));

  const std::array<long, 3> b{1, 1, 0};
  const auto w = ph::check_identity(ph::QIdentity::kAlternatingSum, b, generic());
  EXPECT_TRUE(w.pass);
  EXPECT_EQ(w.lhs, generic().one());

  const std::array<long, 4> c{0, 1, 1, 1};
  EXPECT_TRUE(ph::check_identity(ph::QIdentity::kSymmetrySum, c, generic()).pass);
}

TEST(Identities, ArityAndPreconditions) {
  const std::array<long, 2> two{1, 2};
  EXPECT_THROW(ph::check_identity(ph::QIdentity::kSymmetrySum, two, generic()), ph::ArityMismatch);
  const std::array<long, 3> bad{3, 1, 2};  // needs l <= i <= j
  EXPECT_THROW(ph::check_identity(ph::QIdentity::kBinomialProduct, bad, generic()), ph::PreconditionViolated);
}

TEST(Identities, NamesRoundTrip) {
  for (auto id : {ph::QIdentity::kAlternatingSum, ph::QIdentity::kBinomialProduct, ph::QIdentity::kSymmetrySum,
                  ph::QIdentity::kShiftedAlternatingSum})
    EXPECT_EQ(ph::identity_from_name(ph::identity_name(id)), id);
  EXPECT_FALSE(ph::identity_from_name("nonsense").has_value());
}

TEST(Identities, SmallSweepPassesEverywhere) {
  const auto report = ph::sweep_identities(ph::IdentitySweepConfig::uniform(4, 5));
  EXPECT_TRUE(report.all_passed());
  EXPECT_GT(report.total_checked(), 0U);
}

TEST(Identities, SweepIsIndependentOfWorkerCount) {
  const auto cfg = ph::IdentitySweepConfig::uniform(3, 4);
  const unsigned saved = ph::default_jobs();
  ph::set_default_jobs(1);
  const auto serial = ph::sweep_identities(cfg);
  ph::set_default_jobs(4);
  const auto threaded = ph::sweep_identities(cfg);
  ph::set_default_jobs(saved);
  ASSERT_EQ(serial.suites.size(), threaded.suites.size());
  for (std::size_t k = 0; k < serial.suites.size(); ++k) {
    EXPECT_EQ(serial.suites[k].suite, threaded.suites[k].suite);
    EXPECT_EQ(serial.suites[k].q_label, threaded.suites[k].q_label);
    EXPECT_EQ(serial.suites[k].checked, threaded.suites[k].checked);
  }
}
