#include "partial_hopf/duality.hpp"

#include <map>
#include <mutex>

#include "partial_hopf/algebras.hpp"
#include "partial_hopf/errors.hpp"
#include "partial_hopf/parallel.hpp"
#include "partial_hopf/qcomb.hpp"

namespace partial_hopf {

// ------------------------------------------------------------------ Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, int order)
    : rows_(rows), cols_(cols), order_(order), data_(rows * cols, CycNumber(order)) {}

Matrix Matrix::identity(std::size_t n, int order) {
  Matrix m(n, n, order);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CycNumber(order, 1L);
  return m;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionViolated("matrix shapes do not compose");
  Matrix out(a.rows_, b.cols_, a.order_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycNumber& x = a.at(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const CycNumber& y = b.at(k, c);
        if (!y.is_zero()) out.at(r, c) += x * y;
      }
    }
  return out;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw PreconditionViolated("only square matrices are invertible");
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n, order_);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw PreconditionViolated("matrix is singular");
    if (pivot != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a.at(pivot, c), a.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    CycNumber scale = a.at(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      if (!a.at(col, c).is_zero()) a.at(col, c) *= scale;
      if (!inv.at(col, c).is_zero()) inv.at(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      CycNumber factor = a.at(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        if (!a.at(col, c).is_zero()) a.at(r, c) -= factor * a.at(col, c);
        if (!inv.at(col, c).is_zero()) inv.at(r, c) -= factor * inv.at(col, c);
      }
    }
  }
  return inv;
}

// --------------------------------------------------------------- morphisms

SparseVec HopfMorphism::image(std::size_t c) const {
  SparseVec out;
  for (std::size_t r = 0; r < matrix.rows(); ++r)
    if (!matrix.at(r, c).is_zero()) out.emplace_back(r, matrix.at(r, c));
  return out;
}

namespace {

SparseVec apply_numeric(const HopfMorphism& f, const SparseVec& v) {
  std::vector<CycNumber> acc(f.target->dim, f.target->zero());
  for (const auto& [c, x] : v)
    for (std::size_t r = 0; r < f.matrix.rows(); ++r)
      if (!f.matrix.at(r, c).is_zero()) acc[r] += x * f.matrix.at(r, c);
  return sparsify(acc);
}

void require_shape(const HopfMorphism& f) {
  if (f.matrix.rows() != f.target->dim || f.matrix.cols() != f.source->dim)
    throw PreconditionViolated("morphism matrix does not match the algebras' dimensions");
}

}  // namespace

Report check_algebra_map(const HopfMorphism& f) {
  require_shape(f);
  const HopfData& S = *f.source;
  const HopfData& T = *f.target;
  std::vector<SparseVec> images(S.dim);
  for (std::size_t c = 0; c < S.dim; ++c) images[c] = f.image(c);

  std::vector<Report> parts(S.dim);
  parallel_for(S.dim, [&](std::size_t i) {
    for (std::size_t j = 0; j < S.dim; ++j) {
      SparseVec lhs = apply_numeric(f, S.product(i, j));
      SparseVec rhs = multiply_numeric(T, images[i], images[j]);
      parts[i].check(lhs == rhs, [&] {
        return "f(ab) != f(a)f(b) at (" + S.basis[i] + ", " + S.basis[j] + "): " + format_sparse(T, lhs) + " vs " + format_sparse(T, rhs);
      });
    }
  });
  Report r;
  r.title = "algebra map";
  SparseVec one = apply_numeric(f, S.unit);
  r.check(one == T.unit, [&] { return "f(1) = " + format_sparse(T, one) + " != 1"; });
  for (const auto& p : parts) r.merge(p);
  return r;
}

Report check_coalgebra_map(const HopfMorphism& f) {
  require_shape(f);
  const HopfData& S = *f.source;
  const HopfData& T = *f.target;
  std::vector<SparseVec> images(S.dim);
  for (std::size_t c = 0; c < S.dim; ++c) images[c] = f.image(c);

  std::vector<Report> parts(S.dim);
  parallel_for(S.dim, [&](std::size_t i) {
    NumTensor lhs = comultiply_numeric(T, images[i]);
    NumTensor rhs;
    for (const auto& t : S.comult[i])
      for (const auto& [key, c] : tensor_numeric(images[t.left], images[t.right])) {
        auto [it, inserted] = rhs.emplace(key, c * t.coeff);
        if (!inserted) {
          it->second += c * t.coeff;
          if (it->second.is_zero()) rhs.erase(it);
        }
      }
    parts[i].check(lhs == rhs, [&] { return "delta(f(a)) != (f⊗f)delta(a) at " + S.basis[i]; });
    CycNumber e = counit_numeric(T, images[i]);
    parts[i].check(e == S.counit[i], [&] { return "eps(f(a)) != eps(a) at " + S.basis[i]; });
  });
  Report r;
  r.title = "coalgebra map";
  for (const auto& p : parts) r.merge(p);
  return r;
}

HopfMorphism compose(const HopfMorphism& outer, const HopfMorphism& inner) {
  if (inner.target->dim != outer.source->dim) throw AlgebraMismatch("morphisms do not compose");
  return HopfMorphism{inner.source, outer.target, outer.matrix * inner.matrix};
}

HopfMorphism invert(const HopfMorphism& f) { return HopfMorphism{f.target, f.source, f.matrix.inverse()}; }

std::vector<ParamPoly> push_forward(const HopfMorphism& f, const std::vector<ParamPoly>& v) {
  if (v.size() != f.matrix.cols()) throw AlgebraMismatch("coordinate vector does not match the morphism's source");
  std::vector<ParamPoly> out(f.matrix.rows(), ParamPoly(f.target->order));
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < f.matrix.rows(); ++r)
      if (!f.matrix.at(r, c).is_zero()) out[r] += v[c] * f.matrix.at(r, c);
  }
  return out;
}

// -------------------------------------------------------------- Taft maps

namespace {

HopfPtr cache_dual(const std::string& key, HopfData (*build)(int), int n) {
  static std::mutex mu;
  static std::map<std::string, HopfPtr> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const HopfData>(build(n));
  std::lock_guard lock(mu);
  return cache.emplace(key, built).first->second;
}

/// Matrix of psi without needing the dual algebra object.
Matrix taft_psi_matrix(int n) {
  const std::size_t N = static_cast<std::size_t>(n);
  QCombinatorics qc(QScalar::concrete(zeta_pow(n, 1)));
  Matrix m(N * N, N * N, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CycNumber fact = qc.factorial(j).as_concrete();
      for (int k = 0; k < n; ++k) {
        long e = -static_cast<long>(i) * (k + j) - static_cast<long>(j) * k - static_cast<long>(j) * (j - 1) / 2;
        m.at(static_cast<std::size_t>(k) * N + static_cast<std::size_t>(j), static_cast<std::size_t>(i) * N + static_cast<std::size_t>(j)) =
            fact * zeta_pow(n, e);
      }
    }
  return m;
}

HopfData build_taft_dual(int n) {
  HopfPtr T = taft(n);
  HopfData D = dual_hopf(*T);
  Matrix psi = taft_psi_matrix(n);
  auto image = [&](std::size_t c) {
    SparseVec v;
    for (std::size_t r = 0; r < psi.rows(); ++r)
      if (!psi.at(r, c).is_zero()) v.emplace_back(r, psi.at(r, c));
    return v;
  };
  const std::size_t N = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < N; ++i) D.grouplikes.push_back(image(i * N));
  D.skew_primitives.push_back(SkewPrimitive{image(1), image(0), image(N)});
  return D;
}

}  // namespace

HopfPtr taft_dual(int n) {
  taft(n);  // validates n
  return cache_dual("taft" + std::to_string(n), build_taft_dual, n);
}

HopfMorphism taft_psi(int n) { return HopfMorphism{taft(n), taft_dual(n), taft_psi_matrix(n)}; }

HopfMorphism taft_phi(int n) {
  HopfPtr T = taft(n);
  const std::size_t N = static_cast<std::size_t>(n);
  QCombinatorics qc(QScalar::concrete(zeta_pow(n, 1)));
  Matrix m(N * N, N * N, n);
  const Rational inv_n(1, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CycNumber fact = qc.factorial(j).as_concrete();
      if (fact.is_zero()) throw Error("internal: (j)_q! vanished below n");
      CycNumber prefactor = fact.inverse() * zeta_pow(n, static_cast<long>(i) * j + static_cast<long>(j) * (j - 1) / 2) * inv_n;
      for (int k = 0; k < n; ++k)
        m.at(static_cast<std::size_t>(k) * N + static_cast<std::size_t>(j), static_cast<std::size_t>(i) * N + static_cast<std::size_t>(j)) =
            prefactor * zeta_pow(n, static_cast<long>(k) * (i + j));
    }
  return HopfMorphism{taft_dual(n), T, std::move(m)};
}

// ----------------------------------------------------------- Nichols maps

namespace {

/// Images of the basis under psi, as elements of the plain dual algebra.
std::vector<SparseVec> nichols_psi_images(int n, const HopfData& D) {
  const CycNumber one = D.one();
  const SparseVec psi_g = {{0, one}, {1, -one}};
  std::vector<SparseVec> psi_x(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) {
    std::size_t x = std::size_t{1} << i;
    psi_x[static_cast<std::size_t>(i)] = {{x, one}, {x | 1U, -one}};
  }
  std::vector<SparseVec> images(D.dim);
  for (std::size_t b = 0; b < D.dim; ++b) {
    SparseVec acc = D.unit;
    if (b & 1U) acc = multiply_numeric(D, acc, psi_g);
    for (int i = 1; i < n; ++i)
      if (b & (std::size_t{1} << i)) acc = multiply_numeric(D, acc, psi_x[static_cast<std::size_t>(i)]);
    images[b] = std::move(acc);
  }
  return images;
}

HopfData build_nichols_dual(int n) {
  HopfData D = dual_hopf(*nichols(n));
  auto images = nichols_psi_images(n, D);
  D.grouplikes = {images[0], images[1]};
  for (int i = 1; i < n; ++i) D.skew_primitives.push_back(SkewPrimitive{images[std::size_t{1} << i], images[0], images[1]});
  return D;
}

}  // namespace

HopfPtr nichols_dual(int n) {
  nichols(n);
  return cache_dual("nichols" + std::to_string(n), build_nichols_dual, n);
}

HopfMorphism nichols_psi(int n) {
  HopfPtr H = nichols(n);
  HopfPtr D = nichols_dual(n);
  auto images = nichols_psi_images(n, *D);
  Matrix m(D->dim, H->dim, H->order);
  for (std::size_t c = 0; c < H->dim; ++c)
    for (const auto& [r, v] : images[c]) m.at(r, c) = v;
  return HopfMorphism{H, D, std::move(m)};
}

// --------------------------------------------------------------- transport

namespace {

bool is_dual_of(const HopfData& candidate, const HopfData& H) {
  return candidate.name == H.name + "*" && candidate.dim == H.dim && candidate.order == H.order;
}

bool same_algebra(const HopfPtr& a, const HopfPtr& b) {
  return a == b || (a->name == b->name && a->dim == b->dim && a->order == b->order);
}

}  // namespace

TransportResult transport(const ActionFamily& lambda, const HopfMorphism& iso) {
  const HopfData& H = *lambda.algebra;
  HopfMorphism to_h = iso;
  if (is_dual_of(*iso.source, H) && same_algebra(iso.target, lambda.algebra)) {
    // already H* -> H
  } else if (same_algebra(iso.source, lambda.algebra) && is_dual_of(*iso.target, H)) {
    to_h = invert(iso);
  } else {
    throw AlgebraMismatch("transport needs an isomorphism between " + H.name + " and its dual, got " + iso.source->name +
                          " -> " + iso.target->name);
  }
  AlgElement z{lambda.algebra, push_forward(to_h, lambda.functional.coords)};
  TransportResult result{CoactionFamily{"transport(" + lambda.name + ")", lambda.algebra, lambda.params, z}, {}, {}};
  result.partial = verify_partial_coaction(z);
  result.symmetric = verify_symmetric_coaction(z);
  return result;
}

Report check_subgroup_average(int n, int k, int l) {
  if (n < 1 || k < 1 || l < 1 || n != k * l)
    throw PreconditionViolated("subgroup average needs n = k l with k, l >= 1, got (" + std::to_string(n) + "," +
                               std::to_string(k) + "," + std::to_string(l) + ")");
  const Rational inv_n(1, n);
  std::vector<CycNumber> lhs(static_cast<std::size_t>(n), CycNumber(n)), rhs(static_cast<std::size_t>(n), CycNumber(n));
  for (int t = 0; t < n; ++t) {
    CycNumber inner(n);
    for (int i = 0; i < l; ++i) inner += zeta_pow(n, static_cast<long>(i) * k * t);
    lhs[static_cast<std::size_t>(t)] = inner * inv_n;
  }
  for (int i = 0; i < k; ++i) rhs[static_cast<std::size_t>(i * l)] += CycNumber(n, Rational(l) / n);
  Report r;
  r.title = "subgroup average (" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
  HopfPtr G = group_algebra_cyclic(n);
  r.check(lhs == rhs, [&] { return format_sparse(*G, sparsify(lhs)) + " != " + format_sparse(*G, sparsify(rhs)); });
  return r;
}

}  // namespace partial_hopf
