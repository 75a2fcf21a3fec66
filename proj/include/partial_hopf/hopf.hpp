#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partial_hopf/cyclotomic.hpp"
#include "partial_hopf/param_poly.hpp"

namespace partial_hopf {

/// Sparse vector over Q(zeta_n): (basis index, nonzero coefficient), sorted by index.
using SparseVec = std::vector<std::pair<std::size_t, CycNumber>>;

/// One term c * e_left (x) e_right of a coproduct.
struct TensorTerm {
  std::size_t left;
  std::size_t right;
  CycNumber coeff;
};

/// Skew-primitive metadata: delta(x) = x (x) g + h (x) x.
struct SkewPrimitive {
  SparseVec x;
  SparseVec g;
  SparseVec h;
};

/// Finite-dimensional Hopf algebra given by structure constants in a fixed basis.
struct HopfData {
  std::string name;
  int order = 1;
  std::size_t dim = 0;
  std::vector<std::string> basis;

  /// mult[i * dim + j] = e_i e_j.
  std::vector<SparseVec> mult;
  SparseVec unit;
  /// comult[i] = delta(e_i).
  std::vector<std::vector<TensorTerm>> comult;
  /// counit[i] = eps(e_i); dense.
  std::vector<CycNumber> counit;
  /// antipode[i] = S(e_i).
  std::vector<SparseVec> antipode;

  /// Declared group-like elements. Usually single basis vectors, but the
  /// group-likes of a dual algebra are characters, i.e. combinations.
  std::vector<SparseVec> grouplikes;
  std::vector<SkewPrimitive> skew_primitives;
  /// Optional grading used to order constraint instantiation; empty if unknown.
  std::vector<int> degrees;

  const SparseVec& product(std::size_t i, std::size_t j) const { return mult[i * dim + j]; }
  CycNumber zero() const { return CycNumber(order); }
  CycNumber one() const { return CycNumber(order, 1L); }
  /// Index of the basis element equal to 1_H, if the unit is a basis vector.
  std::optional<std::size_t> unit_index() const;
  /// Index of a basis element by label; throws PreconditionViolated.
  std::size_t index_of(const std::string& label) const;
};

using HopfPtr = std::shared_ptr<const HopfData>;

SparseVec basis_vector(const HopfData& H, std::size_t i);

// ---------------------------------------------------------------- numerics
// Operations on plain numeric vectors (no parameters); used by validators.

std::vector<CycNumber> densify(const HopfData& H, const SparseVec& v);
SparseVec sparsify(const std::vector<CycNumber>& v);
/// Sorts by index, merges duplicates and drops zeros.
SparseVec normalize_sparse(SparseVec v);
SparseVec multiply_numeric(const HopfData& H, const SparseVec& a, const SparseVec& b);
/// Numeric element of H (x) H keyed by index pairs; no zero entries.
using NumTensor = std::map<std::pair<std::size_t, std::size_t>, CycNumber>;
NumTensor comultiply_numeric(const HopfData& H, const SparseVec& v);
NumTensor tensor_numeric(const SparseVec& a, const SparseVec& b);
/// Product in the algebra H (x) H.
NumTensor multiply_numeric(const HopfData& H, const NumTensor& a, const NumTensor& b);
CycNumber counit_numeric(const HopfData& H, const SparseVec& v);
SparseVec antipode_numeric(const HopfData& H, const SparseVec& v);
std::string format_sparse(const HopfData& H, const SparseVec& v);

// ---------------------------------------------------------------- elements

/// Element of H over the parameter ring.
struct AlgElement {
  HopfPtr algebra;
  std::vector<ParamPoly> coords;

  static AlgElement zero(HopfPtr H);
  static AlgElement unit(HopfPtr H);
  static AlgElement basis(HopfPtr H, std::size_t i);
  static AlgElement from_sparse(HopfPtr H, const SparseVec& v);

  bool is_zero() const;
  std::vector<std::string> params() const;
  friend bool operator==(const AlgElement& a, const AlgElement& b);
  AlgElement& operator+=(const AlgElement& other);
  AlgElement& operator-=(const AlgElement& other);
  AlgElement& operator*=(const ParamPoly& scalar);
};

/// Element of H* as values on the basis.
struct Functional {
  HopfPtr algebra;
  std::vector<ParamPoly> coords;

  static Functional zero(HopfPtr H);
  /// The counit eps.
  static Functional counit(HopfPtr H);
  /// The dual-basis functional e_i*.
  static Functional dual_basis(HopfPtr H, std::size_t i);

  bool is_zero() const;
  std::vector<std::string> params() const;
  friend bool operator==(const Functional& a, const Functional& b);
  Functional& operator+=(const Functional& other);
  Functional& operator-=(const Functional& other);
  Functional& operator*=(const ParamPoly& scalar);
};

/// Element of H (x) H as a sparse map keyed by basis index pairs; no zero entries.
struct TensorElement {
  HopfPtr algebra;
  std::map<std::pair<std::size_t, std::size_t>, ParamPoly> coords;

  void add(std::size_t i, std::size_t j, const ParamPoly& c);
  friend bool operator==(const TensorElement& a, const TensorElement& b);
};

AlgElement multiply(const AlgElement& a, const AlgElement& b);
TensorElement comultiply(const AlgElement& a);
ParamPoly apply(const Functional& f, const AlgElement& a);
AlgElement antipode_apply(const AlgElement& a);
/// a (x) b.
TensorElement tensor(const AlgElement& a, const AlgElement& b);
/// Componentwise product in the algebra H (x) H.
TensorElement multiply(const TensorElement& a, const TensorElement& b);
/// (f * g)(b) = f(b_1) g(b_2).
Functional convolution(const Functional& f, const Functional& g);

// ------------------------------------------------------------- validation

/// Outcome of an exhaustive check. Only the first few failures are kept verbatim.
struct Report {
  std::string title;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;

  bool ok() const { return failed == 0; }
  void record(bool pass, const std::string& description);
  /// Like record, but only builds the description on failure.
  template <class Describe>
  void check(bool pass, Describe&& describe) {
    if (pass) {
      ++checked;
    } else {
      record(false, describe());
    }
  }
  void merge(const Report& other);
};

Report validate_bialgebra(const HopfData& H);
Report validate_antipode(const HopfData& H);
/// Declared group-likes and skew-primitives satisfy their defining identities.
Report validate_metadata(const HopfData& H);
/// Shape checks (sizes, orders, index ranges); run before anything else on imported data.
Report validate_shape(const HopfData& H);
/// All of the above.
Report validate_all(const HopfData& H);

/// H* on the dual basis (labels "(l)*"): multiplication is the transpose of
/// delta, delta the transpose of m, unit eps, counit evaluation at 1,
/// antipode the transpose of S. Group-like and skew-primitive metadata are
/// left empty; callers that know them fill them in.
HopfData dual_hopf(const HopfData& H);

std::string element_to_string(const AlgElement& a, std::string_view symbol = "z");
std::string functional_to_string(const Functional& f, std::string_view symbol = "z");

}  // namespace partial_hopf
