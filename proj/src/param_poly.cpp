#include "partial_hopf/param_poly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <unordered_map>

#include "partial_hopf/errors.hpp"

namespace partial_hopf {

namespace {

struct VariableRegistry {
  std::shared_mutex mu;
  std::unordered_map<std::string, VarId> ids;
  std::deque<std::string> names;
};

VariableRegistry& registry() {
  static VariableRegistry r;
  return r;
}

}  // namespace

VarId intern_variable(std::string_view name) {
  auto& r = registry();
  std::string key(name);
  {
    std::shared_lock lock(r.mu);
    auto it = r.ids.find(key);
    if (it != r.ids.end()) return it->second;
  }
  std::unique_lock lock(r.mu);
  auto it = r.ids.find(key);
  if (it != r.ids.end()) return it->second;
  auto id = static_cast<VarId>(r.names.size());
  r.names.push_back(key);
  r.ids.emplace(std::move(key), id);
  return id;
}

std::string variable_name(VarId id) {
  auto& r = registry();
  std::shared_lock lock(r.mu);
  return r.names.at(id);
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(VarId v, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

unsigned Monomial::degree_in(VarId v) const {
  for (const auto& [id, e] : factors_)
    if (id == v) return e;
  return 0;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::without(VarId v) const {
  Monomial m;
  for (const auto& f : factors_)
    if (f.first != v) m.factors_.push_back(f);
  return m;
}

Monomial Monomial::lowered(VarId v) const {
  Monomial m;
  for (const auto& [id, e] : factors_) {
    if (id != v) {
      m.factors_.emplace_back(id, e);
    } else if (e > 1) {
      m.factors_.emplace_back(id, e - 1);
    }
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      m.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      m.factors_.push_back(*ib++);
    } else {
      m.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return m;
}

std::string Monomial::to_string() const {
  std::vector<std::pair<std::string, unsigned>> named;
  named.reserve(factors_.size());
  for (const auto& [id, e] : factors_) named.emplace_back(variable_name(id), e);
  std::sort(named.begin(), named.end());
  std::string out;
  for (const auto& [name, e] : named) {
    if (!out.empty()) out += "*";
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------- ParamPoly

ParamPoly::ParamPoly(const CycNumber& constant) : order_(constant.order()) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

ParamPoly ParamPoly::variable(int order, std::string_view name) { return variable(order, intern_variable(name)); }

ParamPoly ParamPoly::variable(int order, VarId id) {
  ParamPoly p(order);
  p.terms_.emplace(Monomial::of(id), CycNumber(order, 1L));
  return p;
}

ParamPoly ParamPoly::monomial(const CycNumber& coeff, const Monomial& m) {
  ParamPoly p(coeff.order());
  if (!coeff.is_zero()) p.terms_.emplace(m, coeff);
  return p;
}

bool ParamPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

std::optional<CycNumber> ParamPoly::constant_value() const {
  if (terms_.empty()) return CycNumber(order_);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

std::vector<VarId> ParamPoly::var_ids() const {
  std::vector<VarId> ids;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) ids.push_back(f.first);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::vector<std::string> ParamPoly::vars() const {
  std::vector<std::string> names;
  for (VarId id : var_ids()) names.push_back(variable_name(id));
  std::sort(names.begin(), names.end());
  return names;
}

bool ParamPoly::contains(VarId v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first.degree_in(v) > 0; });
}

unsigned ParamPoly::degree_in(VarId v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
  return d;
}

unsigned ParamPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

ParamPoly ParamPoly::coefficient_of(VarId v, unsigned e) const {
  ParamPoly out(order_);
  for (const auto& [m, c] : terms_)
    if (m.degree_in(v) == e) out.terms_.emplace(m.without(v), c);
  return out;
}

std::vector<VarId> ParamPoly::common_variable_factors() const {
  if (terms_.empty()) return {};
  std::vector<VarId> common;
  for (const auto& f : terms_.begin()->first.factors()) common.push_back(f.first);
  for (const auto& [m, c] : terms_) {
    std::erase_if(common, [&m](VarId v) { return m.degree_in(v) == 0; });
    if (common.empty()) break;
  }
  return common;
}

ParamPoly ParamPoly::divide_by_variable(VarId v) const {
  ParamPoly out(order_);
  for (const auto& [m, c] : terms_) {
    if (m.degree_in(v) == 0) throw PreconditionViolated("variable " + variable_name(v) + " does not divide every term");
    out.terms_.emplace(m.lowered(v), c);
  }
  return out;
}

ParamPoly ParamPoly::substitute(VarId v, const ParamPoly& value) const {
  require_same_order(value);
  if (!contains(v)) return *this;
  ParamPoly out(order_);
  std::vector<ParamPoly> powers{ParamPoly(CycNumber(order_, 1L))};
  for (const auto& [m, c] : terms_) {
    unsigned e = m.degree_in(v);
    if (e == 0) {
      out.add_term(m, c);
      continue;
    }
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial rest = m.without(v);
    for (const auto& [pm, pc] : powers[e].terms_) out.add_term(rest * pm, c * pc);
  }
  return out;
}

ParamPoly ParamPoly::substitute(const std::map<VarId, ParamPoly>& values) const {
  if (values.empty()) return *this;
  ParamPoly out(order_);
  std::map<std::pair<VarId, unsigned>, ParamPoly> cache;
  auto power_of = [&](VarId v, unsigned e) -> const ParamPoly& {
    auto key = std::make_pair(v, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, values.at(v).pow(e)).first->second;
  };
  for (const auto& [m, c] : terms_) {
    ParamPoly term = ParamPoly::monomial(c, Monomial{});
    Monomial kept;
    for (const auto& [id, e] : m.factors()) {
      if (values.count(id)) {
        term *= power_of(id, e);
      } else {
        kept = kept * Monomial::of(id, e);
      }
    }
    for (const auto& [tm, tc] : term.terms_) out.add_term(tm * kept, tc);
  }
  return out;
}

ParamPoly ParamPoly::rename(const std::map<std::string, std::string>& names) const {
  std::map<VarId, ParamPoly> values;
  for (const auto& [from, to] : names) values.emplace(intern_variable(from), ParamPoly::variable(order_, to));
  return substitute(values);
}

CycNumber ParamPoly::evaluate(const std::map<std::string, CycNumber>& assignment) const {
  std::map<VarId, CycNumber> by_id;
  for (const auto& [name, value] : assignment) {
    if (value.order() != order_) throw OrderMismatch(order_, value.order());
    by_id.emplace(intern_variable(name), value);
  }
  CycNumber total(order_);
  for (const auto& [m, c] : terms_) {
    CycNumber term = c;
    for (const auto& [id, e] : m.factors()) {
      auto it = by_id.find(id);
      if (it == by_id.end()) throw PreconditionViolated("no value assigned to variable " + variable_name(id));
      term *= it->second.pow(e);
    }
    total += term;
  }
  return total;
}

void ParamPoly::require_same_order(const ParamPoly& other) const {
  if (order_ != other.order_) throw OrderMismatch(order_, other.order_);
}

void ParamPoly::add_term(const Monomial& m, const CycNumber& coeff) {
  if (coeff.order() != order_) throw OrderMismatch(order_, coeff.order());
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  require_same_order(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  require_same_order(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  a.require_same_order(b);
  ParamPoly out(a.order_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) {
  *this = *this * other;
  return *this;
}

ParamPoly& ParamPoly::operator*=(const CycNumber& scalar) {
  if (scalar.order() != order_) throw OrderMismatch(order_, scalar.order());
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (scalar.is_one()) return *this;
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

ParamPoly ParamPoly::pow(unsigned exponent) const {
  ParamPoly result(CycNumber(order_, 1L));
  ParamPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  a.require_same_order(b);
  return a.terms_ == b.terms_;
}

std::string ParamPoly::to_string(std::string_view symbol) const {
  if (terms_.empty()) return "0";
  struct Piece {
    unsigned degree;
    std::string mono;
    std::string text;
  };
  std::vector<Piece> pieces;
  for (const auto& [m, c] : terms_) {
    std::string mono = m.to_string();
    std::string cs = c.to_string(symbol);
    std::size_t nonzero = 0;
    for (const auto& r : c.coords())
      if (r != 0) ++nonzero;
    std::string text;
    if (mono.empty()) {
      text = nonzero > 1 ? "(" + cs + ")" : cs;
    } else if (c.is_one()) {
      text = mono;
    } else if (c.is_rational() && c.rational_part() == -1) {
      text = "-" + mono;
    } else if (nonzero == 1) {
      text = cs + "*" + mono;
    } else {
      text = "(" + cs + ")*" + mono;
    }
    pieces.push_back({m.total_degree(), std::move(mono), std::move(text)});
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.mono < b.mono;
  });
  std::string out;
  for (const auto& p : pieces) {
    if (!out.empty() && p.text[0] != '-') out += "+";
    out += p.text;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.to_string(); }

CycNumber poly_eval(const ParamPoly& p, const std::map<std::string, CycNumber>& assignment) {
  return p.evaluate(assignment);
}

bool poly_is_zero(const ParamPoly& p) { return p.is_zero(); }

}  // namespace partial_hopf
