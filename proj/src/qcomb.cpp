#include "partial_hopf/qcomb.hpp"

#include <algorithm>
#include <sstream>

#include "partial_hopf/errors.hpp"
#include "partial_hopf/parallel.hpp"

namespace partial_hopf {

// ------------------------------------------------------------ LaurentPoly

LaurentPoly LaurentPoly::constant(const Integer& c) {
  LaurentPoly p;
  if (c != 0) p.coeffs_.push_back(c);
  return p;
}

LaurentPoly LaurentPoly::q_power(long exponent) {
  LaurentPoly p;
  p.coeffs_.emplace_back(1);
  p.low_ = exponent;
  return p;
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    low_ += static_cast<long>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  long lo = std::min(low_, other.low_);
  long hi = std::max(high_degree(), other.high_degree());
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1), Integer(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[static_cast<std::size_t>(low_ - lo) + k] += coeffs_[k];
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) out[static_cast<std::size_t>(other.low_ - lo) + k] += other.coeffs_[k];
  coeffs_ = std::move(out);
  low_ = lo;
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.low_ = a.low_ + b.low_;
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    long e = low_ + static_cast<long>(k);
    Integer mag = abs(c);
    if (c < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  return os.str();
}

// ---------------------------------------------------------------- QScalar

QScalar QScalar::generic() { return QScalar(LaurentPoly::q_power(1)); }

QScalar QScalar::concrete(const CycNumber& value) {
  if (value.is_zero()) throw PreconditionViolated("q must be nonzero");
  return QScalar(value);
}

QScalar QScalar::zero() const { return from_integer(0); }
QScalar QScalar::one() const { return from_integer(1); }

QScalar QScalar::from_integer(long c) const {
  if (is_generic()) return QScalar(LaurentPoly::constant(Integer(c)));
  return QScalar(CycNumber(as_concrete().order(), c));
}

bool QScalar::is_zero() const { return is_generic() ? as_generic().is_zero() : as_concrete().is_zero(); }

QScalar QScalar::pow(long exponent) const {
  if (is_generic()) {
    const LaurentPoly& p = as_generic();
    // monomials (the common case: q itself) shift directly
    if (p.coeffs().size() == 1 && p.coeffs()[0] == 1) return QScalar(LaurentPoly::q_power(p.low_degree() * exponent));
    if (exponent < 0) throw PreconditionViolated("negative power of a non-monomial Laurent polynomial");
    LaurentPoly r = LaurentPoly::constant(1);
    for (long k = 0; k < exponent; ++k) r = r * p;
    return QScalar(r);
  }
  return QScalar(as_concrete().pow(exponent));
}

namespace {

void require_same_kind(const QScalar& a, const QScalar& b) {
  if (a.is_generic() != b.is_generic()) throw OrderMismatch("generic q combined with a concrete value");
}

}  // namespace

QScalar& QScalar::operator+=(const QScalar& other) {
  require_same_kind(*this, other);
  if (is_generic()) {
    std::get<LaurentPoly>(value_) += other.as_generic();
  } else {
    std::get<CycNumber>(value_) += other.as_concrete();
  }
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& other) {
  require_same_kind(*this, other);
  if (is_generic()) {
    std::get<LaurentPoly>(value_) -= other.as_generic();
  } else {
    std::get<CycNumber>(value_) -= other.as_concrete();
  }
  return *this;
}

QScalar& QScalar::operator*=(const QScalar& other) {
  require_same_kind(*this, other);
  if (is_generic()) {
    value_ = as_generic() * other.as_generic();
  } else {
    value_ = as_concrete() * other.as_concrete();
  }
  return *this;
}

QScalar QScalar::operator-() const {
  if (is_generic()) return QScalar(-as_generic());
  return QScalar(-as_concrete());
}

bool operator==(const QScalar& a, const QScalar& b) {
  require_same_kind(a, b);
  if (a.is_generic()) return a.as_generic() == b.as_generic();
  return a.as_concrete() == b.as_concrete();
}

std::string QScalar::to_string() const {
  if (is_generic()) return as_generic().to_string();
  return as_concrete().to_string();
}

std::string QScalar::label() const {
  if (is_generic()) return "q";
  const CycNumber& c = as_concrete();
  if (c.order() > 2 && c == zeta_pow(c.order(), 1)) return "zeta_" + std::to_string(c.order());
  if (c.is_rational()) return c.rational_part().get_str();
  return c.to_string();
}

// --------------------------------------------------------- QCombinatorics

QCombinatorics::QCombinatorics(QScalar q) : q_(std::move(q)) {
  positive_powers_.push_back(q_.one());
  rows_.push_back({q_.one()});
}

QScalar QCombinatorics::power(long k) {
  if (k < 0) return q_.pow(k);
  while (static_cast<long>(positive_powers_.size()) <= k) positive_powers_.push_back(positive_powers_.back() * q_);
  return positive_powers_[static_cast<std::size_t>(k)];
}

QScalar QCombinatorics::number(long m) {
  QScalar total = q_.zero();
  for (long l = 0; l < m; ++l) total += power(l);
  return total;
}

QScalar QCombinatorics::factorial(long m) {
  QScalar total = q_.one();
  for (long k = 1; k <= m; ++k) total *= number(k);
  return total;
}

void QCombinatorics::extend_rows(long m) {
  while (static_cast<long>(rows_.size()) <= m) {
    const auto& prev = rows_.back();
    long r = static_cast<long>(rows_.size());
    std::vector<QScalar> row;
    row.reserve(static_cast<std::size_t>(r + 1));
    for (long l = 0; l <= r; ++l) {
      QScalar v = q_.zero();
      if (l >= 1) v += prev[static_cast<std::size_t>(l - 1)];
      if (l <= r - 1) v += power(l) * prev[static_cast<std::size_t>(l)];
      row.push_back(std::move(v));
    }
    rows_.push_back(std::move(row));
  }
}

QScalar QCombinatorics::binomial(long m, long l) {
  if (m < 0 || l < 0 || l > m) return q_.zero();
  extend_rows(m);
  return rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(l)];
}

QScalar q_number(long m, const QScalar& q) { return QCombinatorics(q).number(m); }
QScalar q_factorial(long m, const QScalar& q) { return QCombinatorics(q).factorial(m); }
QScalar q_binomial(long m, long l, const QScalar& q) { return QCombinatorics(q).binomial(m, l); }

// ------------------------------------------------------------- identities

namespace {

QScalar sign(const QScalar& like, long exponent) { return like.from_integer((exponent % 2 == 0) ? 1 : -1); }

std::string tuple_label(std::string_view name, std::span<const long> idx, const QScalar& q) {
  std::ostringstream os;
  os << name << "(";
  for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
  os << ") at q=" << q.label();
  return os.str();
}

}  // namespace

Verdict check_pascal(PascalForm form, long i, long s, QCombinatorics& qc) {
  if (i < 1) throw PreconditionViolated("Pascal rule needs i >= 1");
  QScalar lhs = qc.binomial(i, s);
  QScalar rhs = qc.q().zero();
  if (form == PascalForm::kStandard) {
    rhs = qc.binomial(i - 1, s - 1);
    QScalar tail = qc.binomial(i - 1, s);
    if (!tail.is_zero()) rhs += qc.power(s) * tail;
  } else {
    rhs = qc.binomial(i - 1, s);
    QScalar tail = qc.binomial(i - 1, s - 1);
    if (!tail.is_zero()) rhs += qc.power(i - s) * tail;
  }
  const long idx[] = {i, s};
  bool pass = lhs == rhs;
  return {pass, std::move(lhs), std::move(rhs),
          tuple_label(form == PascalForm::kStandard ? "pascal_standard" : "pascal_reflected", idx, qc.q())};
}

Verdict check_pascal(PascalForm form, long i, long s, const QScalar& q) {
  QCombinatorics qc(q);
  return check_pascal(form, i, s, qc);
}

std::string identity_name(QIdentity id) {
  switch (id) {
    case QIdentity::kAlternatingSum:
      return "alternating_sum";
    case QIdentity::kBinomialProduct:
      return "binomial_product";
    case QIdentity::kSymmetrySum:
      return "symmetry_sum";
    case QIdentity::kShiftedAlternatingSum:
      return "shifted_alternating_sum";
  }
  return "unknown";
}

std::optional<QIdentity> identity_from_name(std::string_view name) {
  for (auto id : {QIdentity::kAlternatingSum, QIdentity::kBinomialProduct, QIdentity::kSymmetrySum,
                  QIdentity::kShiftedAlternatingSum}) {
    if (identity_name(id) == name) return id;
  }
  return std::nullopt;
}

std::size_t identity_arity(QIdentity id) {
  switch (id) {
    case QIdentity::kAlternatingSum:
    case QIdentity::kBinomialProduct:
    case QIdentity::kShiftedAlternatingSum:
      return 3;
    case QIdentity::kSymmetrySum:
      return 4;
  }
  return 0;
}

Verdict check_identity(QIdentity id, std::span<const long> idx, QCombinatorics& qc) {
  if (idx.size() != identity_arity(id))
    throw ArityMismatch(identity_name(id) + " takes " + std::to_string(identity_arity(id)) + " indices, got " +
                        std::to_string(idx.size()));
  for (long v : idx)
    if (v < 0) throw PreconditionViolated(identity_name(id) + " indices must be nonnegative");
  const QScalar& q = qc.q();
  QScalar lhs = q.zero();
  QScalar rhs = q.zero();
  switch (id) {
    case QIdentity::kAlternatingSum: {
      const long i = idx[0], t = idx[1], k = idx[2];
      for (long s = 0; s <= i; ++s) {
        QScalar term = qc.binomial(i, s) * qc.binomial(i + t - s, i + k);
        if (term.is_zero()) continue;
        lhs += sign(q, s) * qc.power(s * k + s * (s + 1) / 2) * term;
      }
      rhs = qc.binomial(t, k);
      break;
    }
    case QIdentity::kBinomialProduct: {
      const long i = idx[0], j = idx[1], l = idx[2];
      if (!(l <= i && i <= j))
        throw PreconditionViolated("binomial_product needs 0 <= l <= i <= j, got (i,j,l) = (" + std::to_string(i) +
                                   "," + std::to_string(j) + "," + std::to_string(l) + ")");
      lhs = qc.binomial(j, l) * qc.binomial(j - l, i - l);
      rhs = qc.binomial(j, i) * qc.binomial(i, l);
      break;
    }
    case QIdentity::kSymmetrySum: {
      const long i = idx[0], j = idx[1], t = idx[2], s = idx[3];
      QScalar sum = q.zero();
      for (long l = 0; l <= j; ++l) {
        QScalar term = qc.binomial(j, l) * qc.binomial(j + t - l, i + s - l) * qc.binomial(l, i);
        if (term.is_zero()) continue;
        sum += sign(q, i - l) * qc.power((i - l) * (i - l + 1) / 2) * term;
      }
      QScalar right = qc.binomial(j, i) * qc.binomial(t, s);
      const long prefactor = s * (i - j);
      if (prefactor >= 0) {
        lhs = qc.power(prefactor) * sum;
        rhs = right;
      } else {
        lhs = sum;
        rhs = qc.power(-prefactor) * right;
      }
      break;
    }
    case QIdentity::kShiftedAlternatingSum: {
      const long j = idx[0], t = idx[1], s = idx[2];
      QScalar sum = q.zero();
      for (long l = 0; l <= j; ++l) {
        QScalar term = qc.binomial(j, l) * qc.binomial(j + t - l, s - l);
        if (term.is_zero()) continue;
        sum += sign(q, l) * qc.power(l * (l - 1) / 2) * term;
      }
      lhs = sum;
      rhs = qc.power(s * j) * qc.binomial(t, s);
      break;
    }
  }
  bool pass = lhs == rhs;
  return {pass, std::move(lhs), std::move(rhs), tuple_label(identity_name(id), idx, q)};
}

Verdict check_identity(QIdentity id, std::span<const long> indices, const QScalar& q) {
  QCombinatorics qc(q);
  return check_identity(id, indices, qc);
}

// ----------------------------------------------------------------- sweeps

IdentitySweepConfig IdentitySweepConfig::uniform(long max, int root_order_max) {
  IdentitySweepConfig c;
  c.pascal_i_max = std::max(1L, max);
  c.pascal_s_max = max + 2;
  c.alternating_max = max;
  c.product_j_max = max;
  c.symmetry_max = max;
  c.shifted_max = max;
  c.symmetric_binomial_m_max = max;
  c.root_order_max = root_order_max;
  return c;
}

bool IdentitySweepReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failed == 0; });
}

std::size_t IdentitySweepReport::total_checked() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.checked;
  return n;
}

std::vector<QScalar> sweep_points(const IdentitySweepConfig& config) {
  std::vector<QScalar> points;
  if (config.include_generic) points.push_back(QScalar::generic());
  for (const auto& r : config.rational_points) points.push_back(QScalar::concrete(CycNumber(1, r)));
  for (int n = config.root_order_min; n <= config.root_order_max; ++n) points.push_back(QScalar::concrete(zeta_pow(n, 1)));
  return points;
}

namespace {

constexpr std::size_t kKeptFailures = 5;

void record(SuiteResult& r, const Verdict& v) {
  ++r.checked;
  if (v.pass) return;
  ++r.failed;
  if (r.failures.size() < kKeptFailures) r.failures.push_back(v.label + ": " + v.lhs.to_string() + " != " + v.rhs.to_string());
}

std::vector<SuiteResult> sweep_one(const IdentitySweepConfig& c, const QScalar& q) {
  QCombinatorics qc(q);
  const std::string label = q.label();
  std::vector<SuiteResult> out;
  auto suite = [&](const std::string& name) -> SuiteResult& {
    out.push_back(SuiteResult{name, label, 0, 0, {}});
    return out.back();
  };

  {
    SuiteResult& standard = suite("pascal_standard");
    for (long i = 1; i <= c.pascal_i_max; ++i)
      for (long s = c.pascal_s_min; s <= c.pascal_s_max; ++s) record(standard, check_pascal(PascalForm::kStandard, i, s, qc));
  }
  {
    SuiteResult& reflected = suite("pascal_reflected");
    for (long i = 1; i <= c.pascal_i_max; ++i)
      for (long s = c.pascal_s_min; s <= c.pascal_s_max; ++s) record(reflected, check_pascal(PascalForm::kReflected, i, s, qc));
  }
  {
    SuiteResult& r = suite("alternating_sum");
    for (long i = 0; i <= c.alternating_max; ++i)
      for (long t = 0; t <= c.alternating_max; ++t)
        for (long k = 0; k <= c.alternating_max; ++k) {
          const long idx[] = {i, t, k};
          record(r, check_identity(QIdentity::kAlternatingSum, idx, qc));
        }
  }
  {
    SuiteResult& r = suite("binomial_product");
    for (long j = 0; j <= c.product_j_max; ++j)
      for (long i = 0; i <= j; ++i)
        for (long l = 0; l <= i; ++l) {
          const long idx[] = {i, j, l};
          record(r, check_identity(QIdentity::kBinomialProduct, idx, qc));
        }
  }
  {
    SuiteResult& r = suite("symmetry_sum");
    for (long i = 0; i <= c.symmetry_max; ++i)
      for (long j = 0; j <= c.symmetry_max; ++j)
        for (long t = 0; t <= c.symmetry_max; ++t)
          for (long s = 0; s <= c.symmetry_max; ++s) {
            const long idx[] = {i, j, t, s};
            record(r, check_identity(QIdentity::kSymmetrySum, idx, qc));
          }
  }
  {
    SuiteResult& r = suite("shifted_alternating_sum");
    for (long j = 0; j <= c.shifted_max; ++j)
      for (long t = 0; t <= c.shifted_max; ++t)
        for (long s = 0; s <= c.shifted_max; ++s) {
          const long idx[] = {j, t, s};
          record(r, check_identity(QIdentity::kShiftedAlternatingSum, idx, qc));
        }
  }
  {
    SuiteResult& r = suite("binomial_symmetry");
    for (long m = 0; m <= c.symmetric_binomial_m_max; ++m)
      for (long l = -2; l <= m + 2; ++l) {
        QScalar a = qc.binomial(m, l);
        QScalar b = qc.binomial(m, m - l);
        const long idx[] = {m, l};
        record(r, Verdict{a == b, a, b, tuple_label("binomial_symmetry", idx, q)});
      }
  }
  return out;
}

}  // namespace

IdentitySweepReport sweep_identities(const IdentitySweepConfig& config) {
  auto points = sweep_points(config);
  std::vector<std::vector<SuiteResult>> per_point(points.size());
  parallel_for(points.size(), [&](std::size_t k) { per_point[k] = sweep_one(config, points[k]); });
  IdentitySweepReport report;
  for (auto& v : per_point)
    for (auto& s : v) report.suites.push_back(std::move(s));
  return report;
}

}  // namespace partial_hopf
