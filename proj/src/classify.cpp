#include "partial_hopf/classify.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "partial_hopf/errors.hpp"

namespace partial_hopf {

namespace {

std::string unknown_name(std::size_t i) { return "_u" + std::to_string(i); }

/// Numeric suffix of a solver variable (`_u12` -> 12), used to order unknowns.
long var_rank(VarId v) {
  std::string name = variable_name(v);
  if (name.size() > 2 && name[0] == '_') return std::stol(name.substr(2));
  return -1;
}

bool is_unknown(VarId v) {
  std::string name = variable_name(v);
  return name.size() > 2 && name[0] == '_' && (name[1] == 'u' || name[1] == 'g');
}

ParamPoly lambda_of(const SolverState& s, const SparseVec& v) {
  ParamPoly acc(s.algebra->order);
  for (const auto& [i, c] : v) acc += s.values[i] * c;
  return acc;
}

SparseVec difference(const HopfData& H, const SparseVec& a, const SparseVec& b) {
  std::vector<CycNumber> d = densify(H, a);
  for (const auto& [i, c] : b) d[i] -= c;
  return sparsify(d);
}

/// An unknown v with p = c v + (terms free of v), c a nonzero constant.
/// Highest rank wins so that low-degree coordinates survive as parameters.
std::optional<std::pair<VarId, CycNumber>> linear_unknown(const ParamPoly& p) {
  std::optional<std::pair<VarId, CycNumber>> best;
  for (VarId v : p.var_ids()) {
    if (!is_unknown(v) || p.degree_in(v) != 1) continue;
    auto c = p.coefficient_of(v, 1).constant_value();
    if (!c || c->is_zero()) continue;
    if (!best || var_rank(v) > var_rank(best->first)) best.emplace(v, *c);
  }
  return best;
}

/// Solves p = 0 for v given p = c v + rest.
ParamPoly solve_for(const ParamPoly& p, VarId v, const CycNumber& c) {
  ParamPoly rest = p - ParamPoly::variable(p.order(), v) * c;
  return rest * (-c.inverse());
}

void substitute(SolverState& s, VarId v, const ParamPoly& value) {
  for (auto& x : s.values)
    if (x.contains(v)) x = x.substitute(v, value);
  for (auto& c : s.pending)
    if (c.kind == Constraint::Kind::Poly && c.poly.contains(v)) c.poly = c.poly.substitute(v, value);
  for (auto& x : s.nonzero)
    if (x.contains(v)) x = x.substitute(v, value);
}

std::string describe(const SolverState& s, std::size_t limit) {
  std::string out;
  std::size_t shown = 0;
  for (const auto& c : s.pending) {
    if (shown++ == limit) {
      out += "; ...";
      break;
    }
    if (!out.empty()) out += "; ";
    out += c.label + ": " + evaluate_constraint(s, c).to_string() + " = 0";
  }
  return out;
}

struct Tree {
  const ClassifyOptions& options;
  std::size_t branches = 1;
  std::vector<Leaf> leaves;

  void run(SolverState s);
};

void Tree::run(SolverState s) {
  while (true) {
    bool progress = false;
    std::vector<bool> resolved(s.pending.size(), false);
    for (std::size_t i = 0; i < s.pending.size(); ++i) {
      ParamPoly p = evaluate_constraint(s, s.pending[i]);
      if (p.is_zero()) {
        resolved[i] = true;
        continue;
      }
      if (p.constant_value()) {
        leaves.push_back({Leaf::Status::Contradiction, s, s.pending[i].label + ": " + p.to_string() + " = 0"});
        return;
      }
      if (auto lin = linear_unknown(p)) {
        ParamPoly value = solve_for(p, lin->first, lin->second);
        if (options.record_steps)
          s.steps.push_back(s.pending[i].label + ": " + variable_name(lin->first) + " = " + value.to_string());
        substitute(s, lin->first, value);
        resolved[i] = true;
        progress = true;
        for (const auto& nz : s.nonzero)
          if (nz.is_zero()) {
            leaves.push_back({Leaf::Status::Contradiction, s, s.pending[i].label + " forces a nonzero quantity to vanish"});
            return;
          }
      }
    }
    std::vector<Constraint> keep;
    for (std::size_t i = 0; i < s.pending.size(); ++i)
      if (!resolved[i]) keep.push_back(std::move(s.pending[i]));
    s.pending = std::move(keep);

    if (s.pending.empty()) {
      leaves.push_back({Leaf::Status::Solved, std::move(s), ""});
      return;
    }
    if (progress) continue;

    // Cancel factors already known to be nonzero.
    for (auto& c : s.pending) {
      ParamPoly p = evaluate_constraint(s, c);
      for (VarId v : p.common_variable_factors()) {
        ParamPoly var = ParamPoly::variable(p.order(), v);
        if (std::find(s.nonzero.begin(), s.nonzero.end(), var) == s.nonzero.end()) continue;
        while (p.common_variable_factors().end() !=
               std::find(p.common_variable_factors().begin(), p.common_variable_factors().end(), v))
          p = p.divide_by_variable(v);
        c.kind = Constraint::Kind::Poly;
        c.poly = p;
        progress = true;
      }
    }
    if (progress) continue;

    for (std::size_t i = 0; i < s.pending.size(); ++i) {
      ParamPoly p = evaluate_constraint(s, s.pending[i]);
      auto factors = p.common_variable_factors();
      std::erase_if(factors, [](VarId v) { return !is_unknown(v); });
      if (factors.empty()) continue;
      VarId v = *std::max_element(factors.begin(), factors.end(), [](VarId a, VarId b) { return var_rank(a) < var_rank(b); });
      if (++branches > options.branch_cap) throw BranchLimitExceeded(options.branch_cap);
      const std::string label = s.pending[i].label;
      const std::string name = variable_name(v);

      SolverState zero = s;
      zero.branch_trail.push_back(label + ": " + name + " = 0");
      substitute(zero, v, ParamPoly(p.order()));
      bool dead = std::any_of(zero.nonzero.begin(), zero.nonzero.end(), [](const ParamPoly& x) { return x.is_zero(); });
      if (dead)
        leaves.push_back({Leaf::Status::Contradiction, std::move(zero), label + ": " + name + " is known to be nonzero"});
      else
        run(std::move(zero));

      SolverState other = std::move(s);
      other.branch_trail.push_back(label + ": " + name + " != 0");
      other.pending[i].kind = Constraint::Kind::Poly;
      other.pending[i].poly = p.divide_by_variable(v);
      other.nonzero.push_back(ParamPoly::variable(p.order(), v));
      run(std::move(other));
      return;
    }
    leaves.push_back({Leaf::Status::Stuck, s, describe(s, 5)});
    return;
  }
}

bool is_basis_unit(const HopfData& H, std::size_t& index) {
  if (H.unit.size() != 1 || !H.unit[0].second.is_one()) return false;
  index = H.unit[0].first;
  return true;
}

}  // namespace

// ------------------------------------------------------------------ state

SolverState initial_state(const HopfPtr& H) {
  SolverState s;
  s.algebra = H;
  for (std::size_t i = 0; i < H->dim; ++i) s.values.push_back(ParamPoly::variable(H->order, unknown_name(i)));
  std::size_t u;
  if (is_basis_unit(*H, u)) {
    s.values[u] = ParamPoly(H->one());
  } else {
    Constraint c;
    c.kind = Constraint::Kind::Linear;
    c.label = "lambda(1) = 1";
    c.w = H->unit;
    c.rhs = H->one();
    s.pending.push_back(std::move(c));
  }
  return s;
}

std::vector<Constraint> pair_constraints(const HopfPtr& H) {
  struct Keyed {
    int degree;
    std::size_t h, y;
  };
  std::vector<Keyed> order;
  for (std::size_t h = 0; h < H->dim; ++h)
    for (std::size_t y = 0; y < H->dim; ++y) {
      int d = H->degrees.empty() ? 0 : H->degrees[h] + H->degrees[y];
      order.push_back({d, h, y});
    }
  std::stable_sort(order.begin(), order.end(), [](const Keyed& a, const Keyed& b) { return a.degree < b.degree; });

  std::vector<Constraint> out;
  out.reserve(order.size());
  for (const auto& [d, h, y] : order) {
    auto terms = std::make_shared<std::vector<Constraint::Term>>();
    terms->push_back({basis_vector(*H, h), basis_vector(*H, y), H->one()});
    for (const auto& t : H->comult[h]) {
      SparseVec right = H->product(t.right, y);
      if (!right.empty()) terms->push_back({basis_vector(*H, t.left), std::move(right), -t.coeff});
    }
    Constraint c;
    c.kind = Constraint::Kind::Pair;
    c.label = "(h,y) = (" + H->basis[h] + ", " + H->basis[y] + ")";
    c.terms = std::move(terms);
    out.push_back(std::move(c));
  }
  return out;
}

ParamPoly evaluate_constraint(const SolverState& s, const Constraint& c) {
  switch (c.kind) {
    case Constraint::Kind::Pair: {
      ParamPoly acc(s.algebra->order);
      for (const auto& t : *c.terms) {
        ParamPoly l = lambda_of(s, t.left);
        if (l.is_zero()) continue;
        ParamPoly r = lambda_of(s, t.right);
        if (r.is_zero()) continue;
        acc += l * r * t.coeff;
      }
      return acc;
    }
    case Constraint::Kind::Linear:
      return lambda_of(s, c.w) - ParamPoly(c.rhs);
    case Constraint::Kind::Poly:
      return c.poly;
  }
  return ParamPoly(s.algebra->order);
}

std::vector<Leaf> propagate(SolverState state, const ClassifyOptions& options) {
  Tree tree{options, 1, {}};
  tree.run(std::move(state));
  return std::move(tree.leaves);
}

// -------------------------------------------------------------- group-likes

GrouplikeAnalysis grouplike_branches(const HopfPtr& H, const ClassifyOptions& options) {
  const HopfData& A = *H;
  const auto& G = A.grouplikes;
  if (G.empty()) throw NonCyclicGrouplikes(A.name + " declares no group-likes");
  const std::size_t m = G.size();

  std::vector<SparseVec> powers;
  for (const auto& candidate : G) {
    std::vector<SparseVec> p = {A.unit};
    bool ok = true;
    for (std::size_t t = 1; t < m && ok; ++t) {
      p.push_back(multiply_numeric(A, p.back(), candidate));
      ok = std::find(G.begin(), G.end(), p.back()) != G.end() &&
           std::find(p.begin(), p.end() - 1, p.back()) == p.end() - 1;
    }
    if (ok && multiply_numeric(A, p.back(), candidate) == A.unit) {
      powers = std::move(p);
      break;
    }
  }
  if (powers.empty()) throw NonCyclicGrouplikes("the group-likes of " + A.name + " do not form a cyclic group");

  // lambda(h)lambda(y) = lambda(h)lambda(hy) for h = g^s, y = g^t, in unknowns _g<t>.
  const int order = A.order;
  SolverState s;
  s.algebra = H;
  auto gv = [&](std::size_t t) { return ParamPoly::variable(order, "_g" + std::to_string(t)); };
  for (std::size_t t = 0; t < m; ++t) s.values.push_back(gv(t));
  {
    Constraint c;
    c.label = "lambda(1) = 1";
    c.poly = gv(0) - ParamPoly(A.one());
    s.pending.push_back(std::move(c));
  }
  auto glabel = [&](std::size_t t) { return format_sparse(A, powers[t]); };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Constraint c;
      c.label = "(h,y) = (" + glabel(a) + ", " + glabel(b) + ")";
      c.poly = gv(a) * gv(b) - gv(a) * gv((a + b) % m);
      s.pending.push_back(std::move(c));
    }
  ClassifyOptions sub = options;
  sub.record_steps = true;
  std::vector<Leaf> leaves = propagate(std::move(s), sub);

  GrouplikeAnalysis out;
  out.check.title = "group-like branches of " + A.name;
  std::vector<int> divs;
  for (int d = 1; d <= static_cast<int>(m); ++d)
    if (m % static_cast<std::size_t>(d) == 0) divs.push_back(d);
  std::vector<int> hits(divs.size(), 0);

  for (std::size_t li = 0; li < leaves.size(); ++li) {
    const Leaf& leaf = leaves[li];
    std::string head = "leaf " + std::to_string(li + 1) + " [";
    for (std::size_t k = 0; k < leaf.state.branch_trail.size(); ++k)
      head += (k ? "; " : "") + leaf.state.branch_trail[k];
    head += "]";
    out.derivation.push_back(head);
    for (const auto& step : leaf.state.steps) out.derivation.push_back("  " + step);
    if (leaf.status == Leaf::Status::Contradiction) {
      out.derivation.push_back("  contradiction: " + leaf.detail);
      continue;
    }
    if (leaf.status == Leaf::Status::Stuck) {
      out.derivation.push_back("  stuck: " + leaf.detail);
      out.check.record(false, "group-like system is stuck: " + leaf.detail);
      continue;
    }
    std::vector<CycNumber> vals;
    bool constant = true;
    for (const auto& v : leaf.state.values) {
      auto c = v.constant_value();
      constant = constant && c.has_value();
      vals.push_back(c ? *c : A.zero());
    }
    if (!constant) {
      out.check.record(false, "group-like solution with a free parameter");
      continue;
    }
    int matched = -1;
    for (std::size_t di = 0; di < divs.size(); ++di) {
      bool eq = true;
      for (std::size_t t = 0; t < m && eq; ++t)
        eq = vals[t] == (t % static_cast<std::size_t>(divs[di]) == 0 ? A.one() : A.zero());
      if (eq) matched = static_cast<int>(di);
    }
    out.check.check(matched >= 0, [&] { return "group-like solution is not a subgroup indicator"; });
    if (matched >= 0) {
      ++hits[static_cast<std::size_t>(matched)];
      out.derivation.push_back("  solution: indicator of <" + glabel(static_cast<std::size_t>(divs[static_cast<std::size_t>(matched)]) % m) + ">");
    }
  }
  for (std::size_t di = 0; di < divs.size(); ++di) {
    std::string n = "<" + glabel(static_cast<std::size_t>(divs[di]) % m) + ">";
    out.check.check(hits[di] == 1, [&] { return "subgroup " + n + " reached " + std::to_string(hits[di]) + " times"; });
    GrouplikeBranch b{divs[di], powers, {}};
    for (std::size_t t = 0; t < m; ++t)
      b.values.push_back(t % static_cast<std::size_t>(divs[di]) == 0 ? A.one() : A.zero());
    out.branches.push_back(std::move(b));
  }
  out.derivation.push_back(out.check.ok() ? "every solution is the indicator of a subgroup, each subgroup exactly once"
                                          : "group-like derivation FAILED");
  return out;
}

// ------------------------------------------------------------ classification

namespace {

struct Candidate {
  ActionFamily family;
  /// Basis index whose coordinate equals each parameter; empty if some
  /// parameter is not a coordinate.
  std::vector<std::size_t> param_coords;
  bool all_coordinate = true;
  bool alive = true;
  std::size_t report;  // index into SolutionSet::branches
};

Candidate canonicalize(const HopfPtr& H, SolverState s) {
  Candidate out;
  const int order = H->order;
  std::vector<std::string> tmp;
  for (std::size_t idx = 0; idx < H->dim; ++idx) {
    const ParamPoly& p = s.values[idx];
    auto lin = linear_unknown(p);
    if (!lin) continue;
    std::string name = "_p" + std::to_string(tmp.size());
    ParamPoly P = ParamPoly::variable(order, name);
    ParamPoly value = solve_for(p - P, lin->first, lin->second);
    for (auto& x : s.values)
      if (x.contains(lin->first)) x = x.substitute(lin->first, value);
    tmp.push_back(name);
    out.param_coords.push_back(idx);
  }
  std::set<VarId> leftover;
  for (const auto& x : s.values)
    for (VarId v : x.var_ids())
      if (is_unknown(v)) leftover.insert(v);
  std::vector<VarId> rest(leftover.begin(), leftover.end());
  std::sort(rest.begin(), rest.end(), [](VarId a, VarId b) { return var_rank(a) < var_rank(b); });
  std::map<std::string, std::string> names;
  for (VarId v : rest) {
    std::string name = "_p" + std::to_string(tmp.size());
    names[variable_name(v)] = name;
    tmp.push_back(name);
    out.all_coordinate = false;
  }
  if (!names.empty())
    for (auto& x : s.values) x = x.rename(names);
  names.clear();
  std::vector<std::string> final_names;
  for (std::size_t k = 0; k < tmp.size(); ++k) {
    final_names.push_back(tmp.size() == 1 ? std::string(kTaftParam) : nichols_param(static_cast<int>(k + 1)));
    names[tmp[k]] = final_names.back();
  }
  Functional f{H, {}};
  for (auto& x : s.values) f.coords.push_back(names.empty() ? x : x.rename(names));
  out.family = ActionFamily{"", H, final_names, std::move(f)};
  return out;
}

/// True if b is a specialisation of a: setting a's parameters to b's values
/// at the parameter coordinates reproduces b.
bool subsumes(const Candidate& a, const Candidate& b) {
  if (!a.all_coordinate || a.family.params.empty()) return a.family.functional == b.family.functional && a.family.params.size() == b.family.params.size();
  std::map<VarId, ParamPoly> sub;
  for (std::size_t k = 0; k < a.family.params.size(); ++k)
    sub[intern_variable(a.family.params[k])] = b.family.functional.coords[a.param_coords[k]];
  for (std::size_t i = 0; i < a.family.functional.coords.size(); ++i)
    if (a.family.functional.coords[i].substitute(sub) != b.family.functional.coords[i]) return false;
  return true;
}

}  // namespace

bool same_family_up_to_renaming(const ActionFamily& a, const ActionFamily& b) {
  if (a.algebra->name != b.algebra->name || a.algebra->dim != b.algebra->dim) return false;
  if (a.params.size() != b.params.size()) return false;
  std::map<std::string, std::string> names;
  for (std::size_t k = 0; k < a.params.size(); ++k) names[b.params[k]] = a.params[k];
  for (std::size_t i = 0; i < a.functional.coords.size(); ++i)
    if (a.functional.coords[i] != b.functional.coords[i].rename(names)) return false;
  return true;
}

SolutionSet classify_base_field_actions(const HopfPtr& H, const ClassifyOptions& options) {
  SolutionSet out;
  out.algebra = H;
  out.grouplikes = grouplike_branches(H, options);
  const HopfData& A = *H;
  const auto pairs = pair_constraints(H);

  const auto& gb = out.grouplikes.branches;
  std::vector<std::vector<Leaf>> per_branch(gb.size());
  parallel_for(
      gb.size(),
      [&](std::size_t bi) {
        const GrouplikeBranch& b = gb[bi];
        const std::size_t m = b.powers.size();
        SolverState s = initial_state(H);
        s.branch_trail.push_back("N = <" + format_sparse(A, b.powers[static_cast<std::size_t>(b.divisor) % m]) + ">");
        for (std::size_t t = 0; t < m; ++t) {
          Constraint c;
          c.kind = Constraint::Kind::Linear;
          c.label = "lambda(" + format_sparse(A, b.powers[t]) + ") = " + b.values[t].to_string();
          c.w = b.powers[t];
          c.rhs = b.values[t];
          s.pending.push_back(std::move(c));
        }
        if (options.use_shortcuts) {
          auto value_of = [&](const SparseVec& g) -> std::optional<CycNumber> {
            for (std::size_t t = 0; t < m; ++t)
              if (b.powers[t] == g) return b.values[t];
            return std::nullopt;
          };
          auto linear = [&](std::string label, SparseVec w) {
            Constraint c;
            c.kind = Constraint::Kind::Linear;
            c.label = std::move(label);
            c.w = std::move(w);
            c.rhs = A.zero();
            s.pending.push_back(std::move(c));
          };
          for (std::size_t t = 1; t < m; ++t) {
            if (!b.values[t].is_one()) continue;
            for (std::size_t u = 0; u < A.dim; ++u) {
              SparseVec e = basis_vector(A, u);
              linear("shift by " + format_sparse(A, b.powers[t]) + " at " + A.basis[u],
                     difference(A, multiply_numeric(A, b.powers[t], e), e));
            }
          }
          for (const auto& sp : A.skew_primitives) {
            auto lg = value_of(sp.g), lh = value_of(sp.h);
            if (!lg || !lh || *lg != *lh) continue;
            linear("skew-primitive " + format_sparse(A, sp.x) + " vanishes", sp.x);
            if (!lh->is_one()) continue;
            for (std::size_t u = 0; u < A.dim; ++u)
              linear("skew-primitive multiple at " + A.basis[u], multiply_numeric(A, sp.x, basis_vector(A, u)));
          }
        }
        s.pending.insert(s.pending.end(), pairs.begin(), pairs.end());
        per_branch[bi] = propagate(std::move(s), options);
      },
      options.jobs);

  std::vector<Candidate> candidates;
  for (auto& leaves : per_branch)
    for (auto& leaf : leaves) {
      BranchReport rep;
      rep.trail = leaf.state.branch_trail;
      rep.detail = leaf.detail;
      switch (leaf.status) {
        case Leaf::Status::Contradiction:
          rep.status = "contradiction";
          break;
        case Leaf::Status::Stuck:
          rep.status = "stuck";
          out.exhaustive = false;
          break;
        case Leaf::Status::Solved: {
          rep.status = "solved";
          Candidate c = canonicalize(H, std::move(leaf.state));
          c.report = out.branches.size();
          bool covered = false;
          for (const auto& other : candidates)
            if (other.alive && subsumes(other, c)) covered = true;
          if (covered) {
            rep.status = "subsumed";
          } else {
            for (auto& other : candidates)
              if (other.alive && subsumes(c, other)) {
                other.alive = false;
                out.branches[other.report].status = "subsumed";
              }
            candidates.push_back(std::move(c));
          }
          break;
        }
      }
      out.branches.push_back(std::move(rep));
    }
  if (!out.grouplikes.check.ok()) out.exhaustive = false;

  const auto known = known_actions(H);
  out.verification.title = "classified families of " + A.name;
  std::size_t unnamed = 0;
  for (auto& c : candidates) {
    if (!c.alive) continue;
    c.family.name = "family" + std::to_string(++unnamed);
    for (const auto& k : known)
      if (same_family_up_to_renaming(k, c.family)) {
        c.family = k;
        break;
      }
    out.branches[c.report].family = static_cast<int>(out.families.size());
    Report v = verify_partial_action(c.family.functional);
    v.title = c.family.name;
    out.verification.merge(v);
    out.families.push_back(std::move(c.family));
  }
  for (auto& b : out.branches)
    if (b.status == "subsumed" && b.detail.empty()) b.detail = "specialisation of another family";
  return out;
}

int family_count(int n) {
  if (n < 2) throw InvalidOrder("family_count needs n >= 2, got " + std::to_string(n));
  int count = 1;
  for (int p = 2; n > 1; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    count *= e + 1;
  }
  return count;
}

}  // namespace partial_hopf
