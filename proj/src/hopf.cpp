#include "partial_hopf/hopf.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "partial_hopf/errors.hpp"
#include "partial_hopf/parallel.hpp"

namespace partial_hopf {

namespace {

constexpr std::size_t kKeptFailures = 20;

using PairMap = NumTensor;
using TripleMap = std::map<std::tuple<std::size_t, std::size_t, std::size_t>, CycNumber>;

template <class Key>
void accumulate(std::map<Key, CycNumber>& acc, const Key& key, const CycNumber& c) {
  if (c.is_zero()) return;
  auto it = acc.find(key);
  if (it == acc.end()) {
    acc.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

SparseVec to_sparse(const std::map<std::size_t, CycNumber>& acc) { return SparseVec(acc.begin(), acc.end()); }

void require_same_algebra(const HopfPtr& a, const HopfPtr& b) {
  if (!a || !b) throw AlgebraMismatch("element without an algebra");
  if (a == b) return;
  if (a->name != b->name || a->dim != b->dim || a->order != b->order)
    throw AlgebraMismatch("operands belong to different algebras: " + a->name + " vs " + b->name);
}

std::string label_tuple(const HopfData& H, std::initializer_list<std::size_t> idx) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (auto i : idx) os << (std::exchange(first, false) ? "" : ",") << i;
  os << ") [";
  first = true;
  for (auto i : idx) os << (std::exchange(first, false) ? "" : ", ") << H.basis[i];
  os << "]";
  return os.str();
}

std::string format_pairs(const HopfData& H, const PairMap& m) {
  if (m.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : m) {
    os << (std::exchange(first, false) ? "" : " + ") << "(" << c.to_string() << ")*" << H.basis[k.first] << "⊗"
       << H.basis[k.second];
  }
  return os.str();
}

}  // namespace

std::optional<std::size_t> HopfData::unit_index() const {
  if (unit.size() == 1 && unit[0].second.is_one()) return unit[0].first;
  return std::nullopt;
}

std::size_t HopfData::index_of(const std::string& label) const {
  auto it = std::find(basis.begin(), basis.end(), label);
  if (it == basis.end()) throw PreconditionViolated("no basis element labelled '" + label + "' in " + name);
  return static_cast<std::size_t>(it - basis.begin());
}

SparseVec basis_vector(const HopfData& H, std::size_t i) { return {{i, H.one()}}; }

PairMap tensor_numeric(const SparseVec& a, const SparseVec& b) {
  PairMap out;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b) accumulate(out, std::make_pair(i, j), ca * cb);
  return out;
}

PairMap multiply_numeric(const HopfData& H, const PairMap& a, const PairMap& b) {
  PairMap out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      const auto& left = H.product(ka.first, kb.first);
      if (left.empty()) continue;
      const auto& right = H.product(ka.second, kb.second);
      if (right.empty()) continue;
      CycNumber c = ca * cb;
      for (const auto& [l, cl] : left)
        for (const auto& [r, cr] : right) accumulate(out, std::make_pair(l, r), c * cl * cr);
    }
  return out;
}


// ---------------------------------------------------------------- numerics

std::vector<CycNumber> densify(const HopfData& H, const SparseVec& v) {
  std::vector<CycNumber> out(H.dim, H.zero());
  for (const auto& [i, c] : v) out[i] += c;
  return out;
}

SparseVec sparsify(const std::vector<CycNumber>& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

SparseVec normalize_sparse(SparseVec v) {
  std::map<std::size_t, CycNumber> acc;
  for (auto& [i, c] : v) accumulate(acc, i, c);
  return to_sparse(acc);
}

SparseVec multiply_numeric(const HopfData& H, const SparseVec& a, const SparseVec& b) {
  std::map<std::size_t, CycNumber> acc;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b) {
      const auto& p = H.product(i, j);
      if (p.empty()) continue;
      CycNumber c = ca * cb;
      for (const auto& [k, ck] : p) accumulate(acc, k, c * ck);
    }
  return to_sparse(acc);
}

PairMap comultiply_numeric(const HopfData& H, const SparseVec& v) {
  PairMap out;
  for (const auto& [i, c] : v)
    for (const auto& t : H.comult[i]) accumulate(out, std::make_pair(t.left, t.right), c * t.coeff);
  return out;
}

CycNumber counit_numeric(const HopfData& H, const SparseVec& v) {
  CycNumber total = H.zero();
  for (const auto& [i, c] : v) total += c * H.counit[i];
  return total;
}

SparseVec antipode_numeric(const HopfData& H, const SparseVec& v) {
  std::map<std::size_t, CycNumber> acc;
  for (const auto& [i, c] : v)
    for (const auto& [k, ck] : H.antipode[i]) accumulate(acc, k, c * ck);
  return to_sparse(acc);
}

std::string format_sparse(const HopfData& H, const SparseVec& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v) {
    os << (std::exchange(first, false) ? "" : " + ");
    if (!c.is_one()) os << "(" << c.to_string() << ")*";
    os << H.basis[i];
  }
  return os.str();
}

// ---------------------------------------------------------------- elements

AlgElement AlgElement::zero(HopfPtr H) {
  std::vector<ParamPoly> coords(H->dim, ParamPoly(H->order));
  return AlgElement{std::move(H), std::move(coords)};
}

AlgElement AlgElement::unit(HopfPtr H) {
  SparseVec u = H->unit;
  return from_sparse(std::move(H), u);
}

AlgElement AlgElement::basis(HopfPtr H, std::size_t i) {
  if (i >= H->dim) throw PreconditionViolated("basis index out of range");
  AlgElement a = zero(std::move(H));
  a.coords[i] = ParamPoly(a.algebra->one());
  return a;
}

AlgElement AlgElement::from_sparse(HopfPtr H, const SparseVec& v) {
  AlgElement a = zero(std::move(H));
  for (const auto& [i, c] : v) a.coords[i] += ParamPoly(c);
  return a;
}

bool AlgElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const ParamPoly& p) { return p.is_zero(); });
}

namespace {

std::vector<std::string> collect_params(const std::vector<ParamPoly>& coords) {
  std::set<std::string> names;
  for (const auto& p : coords)
    for (auto& v : p.vars()) names.insert(v);
  return {names.begin(), names.end()};
}

}  // namespace

std::vector<std::string> AlgElement::params() const { return collect_params(coords); }

bool operator==(const AlgElement& a, const AlgElement& b) {
  require_same_algebra(a.algebra, b.algebra);
  return a.coords == b.coords;
}

AlgElement& AlgElement::operator+=(const AlgElement& other) {
  require_same_algebra(algebra, other.algebra);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& other) {
  require_same_algebra(algebra, other.algebra);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= other.coords[i];
  return *this;
}

AlgElement& AlgElement::operator*=(const ParamPoly& scalar) {
  for (auto& c : coords) c *= scalar;
  return *this;
}

Functional Functional::zero(HopfPtr H) {
  std::vector<ParamPoly> coords(H->dim, ParamPoly(H->order));
  return Functional{std::move(H), std::move(coords)};
}

Functional Functional::counit(HopfPtr H) {
  Functional f = zero(H);
  for (std::size_t i = 0; i < H->dim; ++i) f.coords[i] = ParamPoly(H->counit[i]);
  return f;
}

Functional Functional::dual_basis(HopfPtr H, std::size_t i) {
  if (i >= H->dim) throw PreconditionViolated("basis index out of range");
  Functional f = zero(H);
  f.coords[i] = ParamPoly(H->one());
  return f;
}

bool Functional::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const ParamPoly& p) { return p.is_zero(); });
}

std::vector<std::string> Functional::params() const { return collect_params(coords); }

bool operator==(const Functional& a, const Functional& b) {
  require_same_algebra(a.algebra, b.algebra);
  return a.coords == b.coords;
}

Functional& Functional::operator+=(const Functional& other) {
  require_same_algebra(algebra, other.algebra);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
  return *this;
}

Functional& Functional::operator-=(const Functional& other) {
  require_same_algebra(algebra, other.algebra);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= other.coords[i];
  return *this;
}

Functional& Functional::operator*=(const ParamPoly& scalar) {
  for (auto& c : coords) c *= scalar;
  return *this;
}

void TensorElement::add(std::size_t i, std::size_t j, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto it = coords.find(key);
  if (it == coords.end()) {
    coords.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coords.erase(it);
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  require_same_algebra(a.algebra, b.algebra);
  return a.coords == b.coords;
}

AlgElement multiply(const AlgElement& a, const AlgElement& b) {
  require_same_algebra(a.algebra, b.algebra);
  const HopfData& H = *a.algebra;
  AlgElement out = AlgElement::zero(a.algebra);
  for (std::size_t i = 0; i < H.dim; ++i) {
    if (a.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < H.dim; ++j) {
      if (b.coords[j].is_zero()) continue;
      const auto& p = H.product(i, j);
      if (p.empty()) continue;
      ParamPoly c = a.coords[i] * b.coords[j];
      for (const auto& [k, ck] : p) out.coords[k] += c * ck;
    }
  }
  return out;
}

TensorElement comultiply(const AlgElement& a) {
  const HopfData& H = *a.algebra;
  TensorElement out{a.algebra, {}};
  for (std::size_t i = 0; i < H.dim; ++i) {
    if (a.coords[i].is_zero()) continue;
    for (const auto& t : H.comult[i]) out.add(t.left, t.right, a.coords[i] * t.coeff);
  }
  return out;
}

ParamPoly apply(const Functional& f, const AlgElement& a) {
  require_same_algebra(f.algebra, a.algebra);
  ParamPoly total(a.algebra->order);
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i].is_zero() || f.coords[i].is_zero()) continue;
    total += f.coords[i] * a.coords[i];
  }
  return total;
}

AlgElement antipode_apply(const AlgElement& a) {
  const HopfData& H = *a.algebra;
  AlgElement out = AlgElement::zero(a.algebra);
  for (std::size_t i = 0; i < H.dim; ++i) {
    if (a.coords[i].is_zero()) continue;
    for (const auto& [k, ck] : H.antipode[i]) out.coords[k] += a.coords[i] * ck;
  }
  return out;
}

TensorElement tensor(const AlgElement& a, const AlgElement& b) {
  require_same_algebra(a.algebra, b.algebra);
  TensorElement out{a.algebra, {}};
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coords.size(); ++j) {
      if (b.coords[j].is_zero()) continue;
      out.add(i, j, a.coords[i] * b.coords[j]);
    }
  }
  return out;
}

TensorElement multiply(const TensorElement& a, const TensorElement& b) {
  require_same_algebra(a.algebra, b.algebra);
  const HopfData& H = *a.algebra;
  TensorElement out{a.algebra, {}};
  for (const auto& [ka, ca] : a.coords)
    for (const auto& [kb, cb] : b.coords) {
      const auto& left = H.product(ka.first, kb.first);
      if (left.empty()) continue;
      const auto& right = H.product(ka.second, kb.second);
      if (right.empty()) continue;
      ParamPoly c = ca * cb;
      for (const auto& [l, cl] : left)
        for (const auto& [r, cr] : right) out.add(l, r, c * (cl * cr));
    }
  return out;
}

Functional convolution(const Functional& f, const Functional& g) {
  require_same_algebra(f.algebra, g.algebra);
  const HopfData& H = *f.algebra;
  Functional out = Functional::zero(f.algebra);
  for (std::size_t i = 0; i < H.dim; ++i)
    for (const auto& t : H.comult[i]) {
      if (f.coords[t.left].is_zero() || g.coords[t.right].is_zero()) continue;
      out.coords[i] += f.coords[t.left] * g.coords[t.right] * t.coeff;
    }
  return out;
}

// ------------------------------------------------------------- validation

void Report::record(bool pass, const std::string& description) {
  ++checked;
  if (pass) return;
  ++failed;
  if (failures.size() < kKeptFailures) failures.push_back(description);
}

void Report::merge(const Report& other) {
  checked += other.checked;
  failed += other.failed;
  for (const auto& f : other.failures)
    if (failures.size() < kKeptFailures) failures.push_back(f);
}

namespace {

/// Runs body(i, report) for every basis index in parallel and merges the
/// per-index reports in index order.
template <class Body>
Report sweep_indices(const HopfData& H, std::string title, Body&& body) {
  std::vector<Report> parts(H.dim);
  parallel_for(H.dim, [&](std::size_t i) { body(i, parts[i]); });
  Report total;
  total.title = std::move(title);
  for (const auto& p : parts) total.merge(p);
  return total;
}

}  // namespace

Report validate_shape(const HopfData& H) {
  Report r;
  r.title = "shape";
  auto in_range = [&](const SparseVec& v) {
    return std::all_of(v.begin(), v.end(), [&](const auto& e) { return e.first < H.dim && e.second.order() == H.order; });
  };
  r.record(H.dim > 0, "dimension must be positive");
  r.record(H.basis.size() == H.dim, "basis has " + std::to_string(H.basis.size()) + " labels for dim " + std::to_string(H.dim));
  r.record(H.mult.size() == H.dim * H.dim, "multiplication table has wrong size");
  r.record(H.comult.size() == H.dim, "comultiplication table has wrong size");
  r.record(H.counit.size() == H.dim, "counit has wrong size");
  r.record(H.antipode.size() == H.dim, "antipode has wrong size");
  r.record(H.degrees.empty() || H.degrees.size() == H.dim, "degree vector has wrong size");
  if (!r.ok()) return r;
  for (std::size_t k = 0; k < H.mult.size(); ++k)
    r.check(in_range(H.mult[k]), [&] { return "multiplication entry " + label_tuple(H, {k / H.dim, k % H.dim}) + " out of range or wrong field"; });
  r.check(in_range(H.unit), [] { return std::string("unit out of range or wrong field"); });
  for (std::size_t i = 0; i < H.dim; ++i) {
    r.check(std::all_of(H.comult[i].begin(), H.comult[i].end(),
                        [&](const TensorTerm& t) { return t.left < H.dim && t.right < H.dim && t.coeff.order() == H.order; }),
            [&] { return "comultiplication of " + H.basis[i] + " out of range or wrong field"; });
    r.check(H.counit[i].order() == H.order, [&] { return "counit of " + H.basis[i] + " in wrong field"; });
    r.check(in_range(H.antipode[i]), [&] { return "antipode of " + H.basis[i] + " out of range or wrong field"; });
  }
  for (const auto& g : H.grouplikes) r.check(in_range(g), [] { return std::string("group-like out of range"); });
  for (const auto& s : H.skew_primitives)
    r.check(in_range(s.x) && in_range(s.g) && in_range(s.h), [] { return std::string("skew-primitive out of range"); });
  return r;
}

Report validate_bialgebra(const HopfData& H) {
  Report total;
  total.title = "bialgebra";

  total.merge(sweep_indices(H, "associativity", [&](std::size_t i, Report& r) {
    for (std::size_t j = 0; j < H.dim; ++j) {
      const SparseVec& ij = H.product(i, j);
      for (std::size_t k = 0; k < H.dim; ++k) {
        SparseVec lhs = multiply_numeric(H, ij, basis_vector(H, k));
        SparseVec rhs = multiply_numeric(H, basis_vector(H, i), H.product(j, k));
        r.check(lhs == rhs, [&] {
          return "associativity fails at (i,j,k) = " + label_tuple(H, {i, j, k}) + ": " + format_sparse(H, lhs) +
                 " != " + format_sparse(H, rhs);
        });
      }
    }
  }));

  {
    Report r;
    for (std::size_t i = 0; i < H.dim; ++i) {
      SparseVec e = basis_vector(H, i);
      r.check(multiply_numeric(H, H.unit, e) == e, [&] { return "left unit fails at " + label_tuple(H, {i}); });
      r.check(multiply_numeric(H, e, H.unit) == e, [&] { return "right unit fails at " + label_tuple(H, {i}); });
    }
    total.merge(r);
  }

  total.merge(sweep_indices(H, "coalgebra", [&](std::size_t i, Report& r) {
    TripleMap left, right;
    for (const auto& t : H.comult[i]) {
      for (const auto& u : H.comult[t.left]) accumulate(left, std::make_tuple(u.left, u.right, t.right), t.coeff * u.coeff);
      for (const auto& u : H.comult[t.right]) accumulate(right, std::make_tuple(t.left, u.left, u.right), t.coeff * u.coeff);
    }
    r.check(left == right, [&] { return "coassociativity fails at " + label_tuple(H, {i}); });

    std::map<std::size_t, CycNumber> lc, rc;
    for (const auto& t : H.comult[i]) {
      accumulate(lc, t.right, H.counit[t.left] * t.coeff);
      accumulate(rc, t.left, H.counit[t.right] * t.coeff);
    }
    SparseVec e = basis_vector(H, i);
    r.check(to_sparse(lc) == e, [&] { return "left counit fails at " + label_tuple(H, {i}); });
    r.check(to_sparse(rc) == e, [&] { return "right counit fails at " + label_tuple(H, {i}); });
  }));

  std::vector<PairMap> deltas(H.dim);
  for (std::size_t i = 0; i < H.dim; ++i) deltas[i] = comultiply_numeric(H, basis_vector(H, i));

  total.merge(sweep_indices(H, "compatibility", [&](std::size_t i, Report& r) {
    for (std::size_t j = 0; j < H.dim; ++j) {
      PairMap lhs = comultiply_numeric(H, H.product(i, j));
      PairMap rhs = multiply_numeric(H, deltas[i], deltas[j]);
      r.check(lhs == rhs, [&] {
        return "delta(ab) != delta(a)delta(b) at (i,j) = " + label_tuple(H, {i, j}) + ": " + format_pairs(H, lhs) +
               " vs " + format_pairs(H, rhs);
      });
      CycNumber e_ab = counit_numeric(H, H.product(i, j));
      r.check(e_ab == H.counit[i] * H.counit[j], [&] { return "eps(ab) != eps(a)eps(b) at (i,j) = " + label_tuple(H, {i, j}); });
    }
  }));

  {
    Report r;
    PairMap d1 = comultiply_numeric(H, H.unit);
    r.check(d1 == tensor_numeric(H.unit, H.unit), [&] { return "delta(1) != 1⊗1: " + format_pairs(H, d1); });
    r.check(counit_numeric(H, H.unit).is_one(), [] { return std::string("eps(1) != 1"); });
    total.merge(r);
  }
  return total;
}

Report validate_antipode(const HopfData& H) {
  return sweep_indices(H, "antipode", [&](std::size_t i, Report& r) {
    std::map<std::size_t, CycNumber> left, right;
    for (const auto& t : H.comult[i]) {
      SparseVec sl = multiply_numeric(H, H.antipode[t.left], basis_vector(H, t.right));
      for (const auto& [k, c] : sl) accumulate(left, k, c * t.coeff);
      SparseVec sr = multiply_numeric(H, basis_vector(H, t.left), H.antipode[t.right]);
      for (const auto& [k, c] : sr) accumulate(right, k, c * t.coeff);
    }
    SparseVec expected;
    for (const auto& [k, c] : H.unit)
      if (!(c * H.counit[i]).is_zero()) expected.emplace_back(k, c * H.counit[i]);
    SparseVec l = to_sparse(left), rr = to_sparse(right);
    r.check(l == expected, [&] {
      return "m(S⊗id)delta != eps 1 at " + label_tuple(H, {i}) + ": " + format_sparse(H, l) + " vs " + format_sparse(H, expected);
    });
    r.check(rr == expected, [&] {
      return "m(id⊗S)delta != eps 1 at " + label_tuple(H, {i}) + ": " + format_sparse(H, rr) + " vs " + format_sparse(H, expected);
    });
  });
}

Report validate_metadata(const HopfData& H) {
  Report r;
  r.title = "metadata";
  for (std::size_t k = 0; k < H.grouplikes.size(); ++k) {
    const SparseVec& g = H.grouplikes[k];
    r.check(comultiply_numeric(H, g) == tensor_numeric(g, g),
            [&] { return "declared group-like " + format_sparse(H, g) + " has delta(g) != g⊗g"; });
    r.check(counit_numeric(H, g).is_one(), [&] { return "declared group-like " + format_sparse(H, g) + " has eps(g) != 1"; });
  }
  for (const auto& s : H.skew_primitives) {
    PairMap expected = tensor_numeric(s.x, s.g);
    for (const auto& [key, c] : tensor_numeric(s.h, s.x)) accumulate(expected, key, c);
    PairMap actual = comultiply_numeric(H, s.x);
    r.check(actual == expected, [&] {
      return "declared skew-primitive " + format_sparse(H, s.x) + ": delta = " + format_pairs(H, actual) + ", expected " +
             format_pairs(H, expected);
    });
  }
  return r;
}

Report validate_all(const HopfData& H) {
  Report shape = validate_shape(H);
  if (!shape.ok()) return shape;
  Report total;
  total.title = "hopf";
  total.merge(shape);
  total.merge(validate_bialgebra(H));
  total.merge(validate_antipode(H));
  total.merge(validate_metadata(H));
  return total;
}

HopfData dual_hopf(const HopfData& H) {
  HopfData D;
  D.name = H.name + "*";
  D.order = H.order;
  D.dim = H.dim;
  for (const auto& l : H.basis) D.basis.push_back("(" + l + ")*");
  D.degrees = H.degrees;

  std::vector<std::map<std::size_t, CycNumber>> mult(H.dim * H.dim);
  for (std::size_t i = 0; i < H.dim; ++i)
    for (const auto& t : H.comult[i]) accumulate(mult[t.left * H.dim + t.right], i, t.coeff);
  D.mult.reserve(mult.size());
  for (const auto& m : mult) D.mult.push_back(to_sparse(m));

  D.comult.assign(H.dim, {});
  for (std::size_t i = 0; i < H.dim; ++i)
    for (std::size_t j = 0; j < H.dim; ++j)
      for (const auto& [k, c] : H.product(i, j)) D.comult[k].push_back(TensorTerm{i, j, c});

  D.unit = sparsify(H.counit);
  D.counit = densify(H, H.unit);

  std::vector<std::map<std::size_t, CycNumber>> anti(H.dim);
  for (std::size_t j = 0; j < H.dim; ++j)
    for (const auto& [i, c] : H.antipode[j]) accumulate(anti[i], j, c);
  for (const auto& a : anti) D.antipode.push_back(to_sparse(a));
  return D;
}

namespace {

std::string coords_to_string(const HopfData& H, const std::vector<ParamPoly>& coords, bool dual, std::string_view symbol) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    os << (std::exchange(first, false) ? "" : " + ");
    auto c = coords[i].constant_value();
    if (!c || !c->is_one()) os << "(" << coords[i].to_string(symbol) << ")*";
    os << (dual ? "(" + H.basis[i] + ")*" : H.basis[i]);
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string element_to_string(const AlgElement& a, std::string_view symbol) {
  return coords_to_string(*a.algebra, a.coords, false, symbol);
}

std::string functional_to_string(const Functional& f, std::string_view symbol) {
  return coords_to_string(*f.algebra, f.coords, true, symbol);
}

}  // namespace partial_hopf
