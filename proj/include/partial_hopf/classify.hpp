#pragma once

#include <memory>
#include <string>
#include <vector>

#include "partial_hopf/hopf.hpp"
#include "partial_hopf/parallel.hpp"
#include "partial_hopf/partial.hpp"

namespace partial_hopf {

struct ClassifyOptions {
  /// Upper bound on the number of leaves of one case-split tree.
  std::size_t branch_cap = 64;
  /// Inject the consequences of lambda(g) = 1 and of skew-primitive
  /// metadata as extra linear constraints. Affects speed only.
  bool use_shortcuts = true;
  /// Keep a human-readable log of every substitution.
  bool record_steps = false;
  unsigned jobs = default_jobs();
};

/// One pending equation. Pair: the partial-action condition at (h, y).
/// Linear: lambda(w) = rhs. Poly: p = 0 in the solver's unknowns.
struct Constraint {
  enum class Kind { Pair, Linear, Poly };
  struct Term {
    SparseVec left, right;
    CycNumber coeff;
  };

  Kind kind = Kind::Poly;
  std::string label;
  /// Pair: sum of coeff * lambda(left) * lambda(right).
  std::shared_ptr<const std::vector<Term>> terms;
  SparseVec w;
  CycNumber rhs;
  ParamPoly poly;
};

struct SolverState {
  HopfPtr algebra;
  /// lambda(e_i) in terms of the unknowns `_u<i>`.
  std::vector<ParamPoly> values;
  std::vector<Constraint> pending;
  /// Polynomials known to be nonzero on this branch.
  std::vector<ParamPoly> nonzero;
  std::vector<std::string> free_params;
  std::vector<std::string> branch_trail;
  std::vector<std::string> steps;
};

/// lambda(e_i) = _u<i> everywhere except lambda(1) = 1.
SolverState initial_state(const HopfPtr& H);
/// All basis pairs (h, y), ordered by total degree.
std::vector<Constraint> pair_constraints(const HopfPtr& H);
ParamPoly evaluate_constraint(const SolverState& s, const Constraint& c);

struct Leaf {
  enum class Status { Solved, Contradiction, Stuck };
  Status status;
  SolverState state;
  std::string detail;
};

/// Substitution (unit-coefficient linear unknown), case split on a common
/// variable factor, contradiction on nonzero constants; holds everything else.
/// Throws BranchLimitExceeded when the tree outgrows options.branch_cap.
std::vector<Leaf> propagate(SolverState state, const ClassifyOptions& options = {});

struct GrouplikeBranch {
  /// N = <g^divisor>.
  int divisor;
  /// g^t for t = 0 .. |G|-1, following the generator found.
  std::vector<SparseVec> powers;
  /// lambda(g^t) on this branch: 1 on N, 0 off N.
  std::vector<CycNumber> values;
};

struct GrouplikeAnalysis {
  std::vector<GrouplikeBranch> branches;
  /// Solver log of the restricted system lambda(h)lambda(y) = lambda(h)lambda(hy)
  /// on group-likes, ending with the comparison against the subgroup list.
  std::vector<std::string> derivation;
  Report check;
};

/// Throws NonCyclicGrouplikes when the declared group-likes do not form a cyclic group.
GrouplikeAnalysis grouplike_branches(const HopfPtr& H, const ClassifyOptions& options = {});

struct BranchReport {
  std::vector<std::string> trail;
  std::string status;  // solved, subsumed, contradiction, stuck
  std::string detail;
  int family = -1;
};

struct SolutionSet {
  HopfPtr algebra;
  std::vector<ActionFamily> families;
  bool exhaustive = true;
  std::vector<BranchReport> branches;
  GrouplikeAnalysis grouplikes;
  /// verify_partial_action on every family.
  Report verification;
};

SolutionSet classify_base_field_actions(const HopfPtr& H, const ClassifyOptions& options = {});

/// Product of (exponent + 1) over the prime factorisation of n.
int family_count(int n);

/// Same algebra, same parameter count, and identical coordinates once b's
/// parameters are renamed positionally to a's.
bool same_family_up_to_renaming(const ActionFamily& a, const ActionFamily& b);

}  // namespace partial_hopf
