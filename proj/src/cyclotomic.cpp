#include "partial_hopf/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "partial_hopf/errors.hpp"

namespace partial_hopf {

void IntPoly::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string IntPoly::to_string(char var) const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coeffs[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  if (a.coeffs.empty() || b.coeffs.empty()) return r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  r.trim();
  return r;
}

int euler_phi(int n) {
  if (n < 1) throw InvalidOrder("euler_phi needs n >= 1, got " + std::to_string(n));
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division of a by a monic b; the remainder must vanish.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  IntPoly rem = a;
  IntPoly quot;
  int db = b.degree();
  int da = rem.degree();
  if (da < db) return quot;
  quot.coeffs.assign(static_cast<std::size_t>(da - db + 1), Integer(0));
  for (int k = da; k >= db; --k) {
    Integer c = rem.coeffs[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    quot.coeffs[static_cast<std::size_t>(k - db)] = c;
    for (int i = 0; i <= db; ++i) rem.coeffs[static_cast<std::size_t>(k - db + i)] -= c * b.coeffs[static_cast<std::size_t>(i)];
  }
  rem.trim();
  if (!rem.coeffs.empty()) throw Error("internal: cyclotomic division left a remainder");
  quot.trim();
  return quot;
}

}  // namespace

IntPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw InvalidOrder("cyclotomic_polynomial needs n >= 1, got " + std::to_string(n));
  IntPoly num;
  num.coeffs.assign(static_cast<std::size_t>(n + 1), Integer(0));
  num.coeffs[0] = -1;
  num.coeffs[static_cast<std::size_t>(n)] = 1;
  IntPoly den;
  den.coeffs = {Integer(1)};
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) den = den * cyclotomic_polynomial(d);
  }
  return divide_exact(num, den);
}

CyclotomicField::CyclotomicField(int order)
    : order_(order), phi_(euler_phi(order)), modulus_(cyclotomic_polynomial(order)) {
  int span = std::max(order_, 2 * phi_ - 1);
  powers_.reserve(static_cast<std::size_t>(span));
  std::vector<Integer> v(static_cast<std::size_t>(phi_), Integer(0));
  v[0] = 1;
  powers_.push_back(v);
  for (int e = 1; e < span; ++e) {
    // multiply by x, then fold the overflow coefficient back using the monic modulus
    Integer top = v[static_cast<std::size_t>(phi_ - 1)];
    for (int i = phi_ - 1; i > 0; --i) v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i - 1)];
    v[0] = 0;
    if (top != 0) {
      for (int i = 0; i < phi_; ++i) v[static_cast<std::size_t>(i)] -= top * modulus_.coeffs[static_cast<std::size_t>(i)];
    }
    powers_.push_back(v);
  }
}

std::span<const Integer> CyclotomicField::power(int e) const { return powers_.at(static_cast<std::size_t>(e)); }

const CyclotomicField& cyclotomic_field(int order) {
  if (order < 1) throw InvalidOrder("cyclotomic field order must be >= 1, got " + std::to_string(order));
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const CyclotomicField>> registry;
  std::lock_guard lock(mu);
  auto it = registry.find(order);
  if (it == registry.end()) it = registry.emplace(order, std::make_unique<const CyclotomicField>(order)).first;
  return *it->second;
}

CycNumber::CycNumber() : CycNumber(1) {}

CycNumber::CycNumber(int order)
    : field_(&cyclotomic_field(order)), coords_(static_cast<std::size_t>(field_->degree())) {}

CycNumber::CycNumber(int order, const Rational& value) : CycNumber(order) {
  coords_[0] = value;
  coords_[0].canonicalize();
}

CycNumber::CycNumber(int order, std::vector<Rational> coords) : field_(&cyclotomic_field(order)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != field_->degree())
    throw PreconditionViolated("CycNumber of order " + std::to_string(order) + " needs " +
                               std::to_string(field_->degree()) + " coordinates, got " + std::to_string(coords_.size()));
  for (auto& c : coords_) c.canonicalize();
}

bool CycNumber::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r == 0; });
}

bool CycNumber::is_one() const { return coords_[0] == 1 && is_rational(); }

bool CycNumber::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& r) { return r == 0; });
}

void CycNumber::require_same_field(const CycNumber& other) const {
  if (field_ != other.field_) throw OrderMismatch(order(), other.order());
}

CycNumber& CycNumber::operator+=(const CycNumber& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

CycNumber& CycNumber::operator*=(const Rational& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  a.require_same_field(b);
  const int phi = a.field_->degree();
  CycNumber out(a.order());
  if (phi == 1) {
    out.coords_[0] = a.coords_[0] * b.coords_[0];
    return out;
  }
  // rational fast paths
  if (b.is_rational()) {
    out = a;
    if (b.coords_[0] != 1) out *= b.coords_[0];
    return out;
  }
  if (a.is_rational()) {
    out = b;
    if (a.coords_[0] != 1) out *= a.coords_[0];
    return out;
  }
  std::vector<Rational> conv(static_cast<std::size_t>(2 * phi - 1));
  for (int i = 0; i < phi; ++i) {
    const Rational& ai = a.coords_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; j < phi; ++j) {
      const Rational& bj = b.coords_[static_cast<std::size_t>(j)];
      if (bj == 0) continue;
      conv[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  for (int i = 0; i < phi; ++i) out.coords_[static_cast<std::size_t>(i)] = conv[static_cast<std::size_t>(i)];
  for (int e = phi; e < 2 * phi - 1; ++e) {
    const Rational& c = conv[static_cast<std::size_t>(e)];
    if (c == 0) continue;
    auto p = a.field_->power(e);
    for (int i = 0; i < phi; ++i) {
      if (p[static_cast<std::size_t>(i)] != 0) out.coords_[static_cast<std::size_t>(i)] += c * p[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

CycNumber& CycNumber::operator*=(const CycNumber& other) {
  *this = *this * other;
  return *this;
}

CycNumber& CycNumber::operator/=(const CycNumber& other) {
  *this = *this * other.inverse();
  return *this;
}

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(order()) + ")");
  const int phi = field_->degree();
  if (is_rational()) return CycNumber(order(), Rational(1) / coords_[0]);
  // Solve M y = e_0 where column k of M holds the coordinates of this * zeta^k.
  const auto n = static_cast<std::size_t>(phi);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  CycNumber col = *this;
  const CycNumber zeta = zeta_pow(order(), 1);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = 0; r < n; ++r) m[r][k] = col.coords_[r];
    col = col * zeta;
  }
  m[0][n] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) throw Error("internal: singular multiplication matrix in Q(zeta_" + std::to_string(order()) + ")");
    std::swap(m[pivot], m[c]);
    Rational inv = 1 / m[c][c];
    for (std::size_t j = c; j <= n; ++j) m[c][j] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> y(n);
  for (std::size_t r = 0; r < n; ++r) y[r] = m[r][n];
  return CycNumber(order(), std::move(y));
}

CycNumber CycNumber::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CycNumber result(order(), Rational(1));
  CycNumber base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  a.require_same_field(b);
  return a.coords_ == b.coords_;
}

std::strong_ordering operator<=>(const CycNumber& a, const CycNumber& b) {
  if (a.order() != b.order()) return a.order() <=> b.order();
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string CycNumber::to_string(std::string_view symbol) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    const Rational& c = coords_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (c < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << symbol;
    if (k >= 2) os << "^" << k;
  }
  if (first) return "0";
  return os.str();
}

std::size_t CycNumber::hash() const {
  std::size_t h = static_cast<std::size_t>(order()) * 0x9e3779b97f4a7c15ULL;
  for (const auto& c : coords_) {
    std::size_t v = mpz_get_ui(c.get_num_mpz_t()) * 31 + mpz_get_ui(c.get_den_mpz_t());
    if (sgn(c) < 0) v = ~v;
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const CycNumber& c) { return os << c.to_string(); }

CycNumber zeta_pow(int n, long k) {
  const CyclotomicField& f = cyclotomic_field(n);
  long r = k % n;
  if (r < 0) r += n;
  auto p = f.power(static_cast<int>(r));
  std::vector<Rational> coords(p.begin(), p.end());
  return CycNumber(n, std::move(coords));
}

CycNumber cyc_invert(const CycNumber& a) { return a.inverse(); }

}  // namespace partial_hopf
