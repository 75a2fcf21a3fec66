#pragma once

#include <vector>

#include "partial_hopf/hopf.hpp"
#include "partial_hopf/partial.hpp"

namespace partial_hopf {

/// Dense matrix over Q(zeta_n), row-major.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, int order);
  static Matrix identity(std::size_t n, int order);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int order() const { return order_; }
  CycNumber& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycNumber& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_identity() const;
  /// Throws PreconditionViolated if singular.
  Matrix inverse() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_, cols_;
  int order_;
  std::vector<CycNumber> data_;
};

/// Linear map between two algebras; column c holds the image of source basis element c.
struct HopfMorphism {
  HopfPtr source;
  HopfPtr target;
  Matrix matrix;

  SparseVec image(std::size_t c) const;
};

/// f(ab) = f(a)f(b) on all basis pairs and f(1) = 1.
Report check_algebra_map(const HopfMorphism& f);
/// delta(f(a)) = (f (x) f)delta(a) and eps(f(a)) = eps(a) on the basis.
Report check_coalgebra_map(const HopfMorphism& f);
HopfMorphism compose(const HopfMorphism& outer, const HopfMorphism& inner);
HopfMorphism invert(const HopfMorphism& f);

/// Coordinates pushed through the matrix: result_r = sum_c M(r,c) v_c.
std::vector<ParamPoly> push_forward(const HopfMorphism& f, const std::vector<ParamPoly>& v);

/// Dual of taft(n) with group-like and skew-primitive metadata carried over
/// from the images of g and x under taft_psi. Cached.
HopfPtr taft_dual(int n);
/// Dual of nichols(n) with metadata carried over from nichols_psi.
HopfPtr nichols_dual(int n);

/// g^i x^j -> sum_k (j)_q! q^(-i(k+j) - jk - j(j-1)/2) (g^k x^j)*.
HopfMorphism taft_psi(int n);
/// (g^i x^j)* -> (1/n) ((j)_q!)^(-1) q^(ij + j(j-1)/2) sum_k q^(k(i+j)) g^k x^j.
HopfMorphism taft_phi(int n);
/// g -> 1* - g*, x_i -> x_i* - (g x_i)*, extended to basis monomials by
/// ordered convolution products in canonical monomial order.
HopfMorphism nichols_psi(int n);

/// Result of pushing a partial action through an isomorphism H* -> H.
struct TransportResult {
  CoactionFamily family;
  Report partial;
  Report symmetric;
};

/// iso may go H* -> H, or H -> H* (then it is inverted first). Throws
/// AlgebraMismatch if neither end matches the family's algebra.
TransportResult transport(const ActionFamily& lambda, const HopfMorphism& iso);

/// For n = k l, compares in the group algebra of C_n:
///   (1/n) sum_t (sum_{i<l} q^(ikt)) g^t  and  (l/n) sum_{i<k} g^(il).
/// Throws PreconditionViolated if n != k l.
Report check_subgroup_average(int n, int k, int l);

}  // namespace partial_hopf
