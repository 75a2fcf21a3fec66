#include "partial_hopf/partial.hpp"

#include <set>
#include <sstream>

#include "partial_hopf/algebras.hpp"
#include "partial_hopf/errors.hpp"
#include "partial_hopf/parallel.hpp"
#include "partial_hopf/qcomb.hpp"

namespace partial_hopf {

namespace {

std::string pair_label(const HopfData& H, std::size_t h, std::size_t y) {
  return "(h,y) = (" + H.basis[h] + ", " + H.basis[y] + ")";
}

std::string first_difference(const TensorElement& a, const TensorElement& b) {
  const HopfData& H = *a.algebra;
  auto coord = [](const TensorElement& t, const std::pair<std::size_t, std::size_t>& k) {
    auto it = t.coords.find(k);
    return it == t.coords.end() ? std::string("0") : it->second.to_string();
  };
  std::set<std::pair<std::size_t, std::size_t>> keys;
  for (const auto& [k, c] : a.coords) keys.insert(k);
  for (const auto& [k, c] : b.coords) keys.insert(k);
  std::ostringstream os;
  int shown = 0;
  for (const auto& k : keys) {
    std::string l = coord(a, k), r = coord(b, k);
    if (l == r) continue;
    if (shown++ == 3) {
      os << " ...";
      break;
    }
    os << " [" << H.basis[k.first] << "⊗" << H.basis[k.second] << "] " << l << " vs " << r << ";";
  }
  return os.str();
}

Report verify_action(const Functional& lambda, bool symmetric) {
  const HopfData& H = *lambda.algebra;
  Report head;
  head.title = symmetric ? "symmetric partial action" : "partial action";
  ParamPoly at_one = evaluate_on(lambda, H.unit);
  head.check(at_one == ParamPoly(H.one()), [&] { return "lambda(1) = " + at_one.to_string() + ", expected 1"; });

  std::vector<Report> parts(H.dim);
  parallel_for(H.dim, [&](std::size_t h) {
    Report& r = parts[h];
    for (std::size_t y = 0; y < H.dim; ++y) {
      ParamPoly lhs = lambda.coords[h] * lambda.coords[y];
      ParamPoly rhs(H.order);
      for (const auto& t : H.comult[h]) {
        if (!symmetric) {
          if (lambda.coords[t.left].is_zero()) continue;
          ParamPoly v = evaluate_on(lambda, H.product(t.right, y));
          if (!v.is_zero()) rhs += lambda.coords[t.left] * v * t.coeff;
        } else {
          if (lambda.coords[t.right].is_zero()) continue;
          ParamPoly v = evaluate_on(lambda, H.product(t.left, y));
          if (!v.is_zero()) rhs += v * lambda.coords[t.right] * t.coeff;
        }
      }
      r.check(lhs == rhs, [&] {
        return std::string(symmetric ? "lambda(h)lambda(y) != lambda(h_1 y)lambda(h_2)" : "lambda(h)lambda(y) != lambda(h_1)lambda(h_2 y)") +
               " at " + pair_label(H, h, y) + ": " + lhs.to_string() + " vs " + rhs.to_string();
      });
    }
  });
  for (const auto& p : parts) head.merge(p);
  return head;
}

Report verify_coaction(const AlgElement& z, bool symmetric) {
  const HopfData& H = *z.algebra;
  Report r;
  r.title = symmetric ? "symmetric partial coaction" : "partial coaction";
  ParamPoly eps = apply(Functional::counit(z.algebra), z);
  r.check(eps == ParamPoly(H.one()), [&] { return "eps(z) = " + eps.to_string() + ", expected 1"; });

  TensorElement zz = tensor(z, z);
  TensorElement z1 = tensor(z, AlgElement::unit(z.algebra));
  TensorElement dz = comultiply(z);
  TensorElement rhs = symmetric ? multiply(dz, z1) : multiply(z1, dz);
  r.check(zz == rhs, [&] {
    return std::string(symmetric ? "z⊗z != delta(z)(z⊗1):" : "z⊗z != (z⊗1)delta(z):") + first_difference(zz, rhs);
  });
  if (!symmetric) {
    AlgElement sq = multiply(z, z);
    r.check(sq == z, [&] { return "z^2 != z: z^2 = " + element_to_string(sq); });
  }
  return r;
}

ParamPoly alpha(int order) { return ParamPoly::variable(order, kTaftParam); }

void require_divisor(int k, int n) {
  if (k < 1 || n % k != 0) throw NotADivisor(k, n);
}

/// (kind, n) for built-in algebra names such as "taft(4)".
std::pair<std::string, int> builtin_kind(const HopfData& H) {
  auto open = H.name.find('(');
  if (open == std::string::npos || H.name.back() != ')') return {"", 0};
  try {
    return {H.name.substr(0, open), std::stoi(H.name.substr(open + 1))};
  } catch (const std::exception&) {
    return {"", 0};
  }
}

std::string subgroup_label(int k) { return k == 1 ? "<g>" : "<g^" + std::to_string(k) + ">"; }

}  // namespace

ParamPoly evaluate_on(const Functional& lambda, const SparseVec& v) {
  ParamPoly total(lambda.algebra->order);
  for (const auto& [i, c] : v)
    if (!lambda.coords[i].is_zero()) total += lambda.coords[i] * c;
  return total;
}

Report verify_partial_action(const Functional& lambda) { return verify_action(lambda, false); }
Report verify_symmetric_action(const Functional& lambda) { return verify_action(lambda, true); }
Report verify_partial_coaction(const AlgElement& z) { return verify_coaction(z, false); }
Report verify_symmetric_coaction(const AlgElement& z) { return verify_coaction(z, true); }

std::string nichols_param(int i) { return "alpha" + std::to_string(i); }

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

ActionFamily counit_action(HopfPtr H) {
  Functional f = Functional::counit(H);
  return ActionFamily{"eps", std::move(H), {}, std::move(f)};
}

CoactionFamily unit_coaction(HopfPtr H) {
  AlgElement z = AlgElement::unit(H);
  return CoactionFamily{"1", std::move(H), {}, std::move(z)};
}

// ------------------------------------------------------------------ Taft

ActionFamily taft_lambda_alpha(int n) {
  HopfPtr T = taft(n);
  QCombinatorics qc(QScalar::concrete(zeta_pow(n, 1)));
  Functional f = Functional::zero(T);
  const ParamPoly a = alpha(n);
  for (int j = 0; j < n; ++j) {
    ParamPoly aj = a.pow(static_cast<unsigned>(j));
    for (int i = 0; i <= j; ++i) {
      CycNumber c = qc.power(i * (i + 1) / 2).as_concrete() * qc.binomial(j, i).as_concrete();
      if (i % 2 == 1) c = -c;
      std::size_t idx = static_cast<std::size_t>((n - i) % n) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
      f.coords[idx] = aj * c;
    }
  }
  return ActionFamily{"lambda_alpha", T, {kTaftParam}, std::move(f)};
}

ActionFamily taft_lambda_N0(int n, int k) {
  HopfPtr T = taft(n);
  require_divisor(k, n);
  Functional f = Functional::zero(T);
  for (int i = 0; i < n; i += k) f.coords[static_cast<std::size_t>(i) * static_cast<std::size_t>(n)] = ParamPoly(T->one());
  return ActionFamily{"lambda0" + subgroup_label(k), T, {}, std::move(f)};
}

CoactionFamily taft_z_alpha(int n) {
  HopfPtr T = taft(n);
  QCombinatorics qc(QScalar::concrete(zeta_pow(n, 1)));
  const Rational inv_n(1, n);
  std::vector<CycNumber> inv_fact;
  for (int j = 0; j < n; ++j) {
    CycNumber f = qc.factorial(j).as_concrete();
    if (f.is_zero()) throw Error("internal: (" + std::to_string(j) + ")_q! vanished below n");
    inv_fact.push_back(f.inverse());
  }
  AlgElement z = AlgElement::zero(T);
  const ParamPoly a = alpha(n);
  const std::size_t N = static_cast<std::size_t>(n);
  for (int k = 0; k < n; ++k) {
    z.coords[static_cast<std::size_t>(k) * N] = ParamPoly(CycNumber(n, inv_n));
    for (int j = 1; j < n; ++j) {
      CycNumber inner(n);
      for (int i = 0; i <= j; ++i) {
        CycNumber term = qc.power(i * (i + 1) / 2).as_concrete() * zeta_pow(n, -static_cast<long>(i) * (j + k)) *
                         inv_fact[static_cast<std::size_t>(j - i)] * inv_fact[static_cast<std::size_t>(i)];
        if (i % 2 == 1) term = -term;
        inner += term;
      }
      CycNumber c = zeta_pow(n, static_cast<long>(j) * (j - 1) / 2 + static_cast<long>(k) * j) * inner * inv_n;
      z.coords[static_cast<std::size_t>(k) * N + static_cast<std::size_t>(j)] = a.pow(static_cast<unsigned>(j)) * c;
    }
  }
  return CoactionFamily{"z_alpha", T, {kTaftParam}, std::move(z)};
}

CoactionFamily taft_z_N(int n, int k) {
  HopfPtr T = taft(n);
  require_divisor(k, n);
  const int order_N = n / k;
  AlgElement z = AlgElement::zero(T);
  for (int i = 0; i < n; i += k) z.coords[static_cast<std::size_t>(i) * static_cast<std::size_t>(n)] = ParamPoly(CycNumber(n, Rational(1, order_N)));
  return CoactionFamily{"z" + subgroup_label(k), T, {}, std::move(z)};
}

// --------------------------------------------------------------- Nichols

ActionFamily nichols_lambda_alpha(int n) {
  HopfPtr H = nichols(n);
  Functional f = Functional::zero(H);
  f.coords[0] = ParamPoly(H->one());
  std::vector<std::string> params;
  for (int i = 1; i < n; ++i) {
    params.push_back(nichols_param(i));
    ParamPoly a = ParamPoly::variable(H->order, params.back());
    f.coords[std::size_t{1} << i] = a;
    f.coords[(std::size_t{1} << i) | 1U] = a;
  }
  return ActionFamily{"lambda_alpha", H, std::move(params), std::move(f)};
}

CoactionFamily nichols_z_alpha(int n) {
  HopfPtr H = nichols(n);
  AlgElement z = AlgElement::zero(H);
  const CycNumber half(H->order, Rational(1, 2));
  z.coords[0] = ParamPoly(half);
  z.coords[1] = ParamPoly(half);
  std::vector<std::string> params;
  for (int i = 1; i < n; ++i) {
    params.push_back(nichols_param(i));
    z.coords[(std::size_t{1} << i) | 1U] = -ParamPoly::variable(H->order, params.back());
  }
  return CoactionFamily{"z_alpha", H, std::move(params), std::move(z)};
}

// ------------------------------------------------------------------ groups

ActionFamily group_partial_action(int n, int d) {
  HopfPtr G = group_algebra_cyclic(n);
  require_divisor(d, n);
  Functional f = Functional::zero(G);
  for (int i = 0; i < n; i += d) f.coords[static_cast<std::size_t>(i)] = ParamPoly(G->one());
  return ActionFamily{"lambda" + subgroup_label(d), G, {}, std::move(f)};
}

ActionFamily dual_group_partial_action(int n, int d) {
  HopfPtr D = dual_group_algebra_cyclic(n);
  require_divisor(d, n);
  Functional f = Functional::zero(D);
  const CycNumber v(n, Rational(d, n));
  for (int i = 0; i < n; i += d) f.coords[static_cast<std::size_t>(i)] = ParamPoly(v);
  return ActionFamily{"lambda*" + subgroup_label(d), D, {}, std::move(f)};
}

CoactionFamily group_partial_coaction(int n, int d) {
  HopfPtr G = group_algebra_cyclic(n);
  require_divisor(d, n);
  AlgElement z = AlgElement::zero(G);
  const CycNumber v(n, Rational(d, n));
  for (int i = 0; i < n; i += d) z.coords[static_cast<std::size_t>(i)] = ParamPoly(v);
  return CoactionFamily{"z" + subgroup_label(d), G, {}, std::move(z)};
}

CoactionFamily dual_group_partial_coaction(int n, int d) {
  HopfPtr D = dual_group_algebra_cyclic(n);
  require_divisor(d, n);
  AlgElement z = AlgElement::zero(D);
  for (int i = 0; i < n; i += d) z.coords[static_cast<std::size_t>(i)] = ParamPoly(D->one());
  return CoactionFamily{"z*" + subgroup_label(d), D, {}, std::move(z)};
}

std::vector<ActionFamily> known_actions(const HopfPtr& H) {
  auto [kind, n] = builtin_kind(*H);
  std::vector<ActionFamily> out;
  if (kind == "taft" && H == taft(n)) {
    out.push_back(counit_action(H));
    for (int k : divisors(n))
      if (k != 1 && k != n) out.push_back(taft_lambda_N0(n, k));
    out.push_back(taft_lambda_alpha(n));
  } else if (kind == "nichols" && H == nichols(n)) {
    out.push_back(counit_action(H));
    out.push_back(nichols_lambda_alpha(n));
  } else if (kind == "groupalg" && H == group_algebra_cyclic(n)) {
    for (int d : divisors(n)) out.push_back(group_partial_action(n, d));
  } else if (kind == "dualgroupalg" && H == dual_group_algebra_cyclic(n)) {
    for (int d : divisors(n)) out.push_back(dual_group_partial_action(n, d));
  } else {
    out.push_back(counit_action(H));
  }
  return out;
}

std::vector<CoactionFamily> known_coactions(const HopfPtr& H) {
  auto [kind, n] = builtin_kind(*H);
  std::vector<CoactionFamily> out;
  if (kind == "taft" && H == taft(n)) {
    out.push_back(unit_coaction(H));
    for (int k : divisors(n))
      if (k != 1 && k != n) out.push_back(taft_z_N(n, k));
    out.push_back(taft_z_alpha(n));
  } else if (kind == "nichols" && H == nichols(n)) {
    out.push_back(unit_coaction(H));
    out.push_back(nichols_z_alpha(n));
  } else if (kind == "groupalg" && H == group_algebra_cyclic(n)) {
    for (int d : divisors(n)) out.push_back(group_partial_coaction(n, d));
  } else if (kind == "dualgroupalg" && H == dual_group_algebra_cyclic(n)) {
    for (int d : divisors(n)) out.push_back(dual_group_partial_coaction(n, d));
  } else {
    out.push_back(unit_coaction(H));
  }
  return out;
}

// ------------------------------------------------------------ cross-checks

Report special_value_checks(int n) {
  ActionFamily fam = taft_lambda_alpha(n);
  const Functional& f = fam.functional;
  QCombinatorics qc(QScalar::concrete(zeta_pow(n, 1)));
  const ParamPoly a = alpha(n);
  const std::size_t N = static_cast<std::size_t>(n);
  auto at = [&](long i, int j) { return f.coords[static_cast<std::size_t>(((i % n) + n) % n) * N + static_cast<std::size_t>(j)]; };
  auto apow = [&](int e) { return a.pow(static_cast<unsigned>(e)); };

  Report r;
  r.title = "special values of lambda_alpha on taft(" + std::to_string(n) + ")";
  for (int j = 0; j < n; ++j) {
    r.check(at(0, j) == apow(j), [&] { return "(i) lambda(x^" + std::to_string(j) + ") = " + at(0, j).to_string(); });
    ParamPoly expected3 = apow(j) * (-(qc.q().as_concrete() * qc.number(j).as_concrete()));
    r.check(at(n - 1, j) == expected3, [&] {
      return "(iii) lambda(g^(n-1)x^" + std::to_string(j) + ") = " + at(n - 1, j).to_string() + " vs " + expected3.to_string();
    });
  }
  for (int i = 0; i < n; ++i) {
    CycNumber c = qc.power(i * (i + 1) / 2).as_concrete();
    if (i % 2 == 1) c = -c;
    ParamPoly expected2 = apow(i) * c;
    r.check(at(n - i, i) == expected2, [&] {
      return "(ii) lambda(g^(n-" + std::to_string(i) + ")x^" + std::to_string(i) + ") = " + at(n - i, i).to_string() + " vs " +
             expected2.to_string();
    });
    r.check(at(i, n - 1) == apow(n - 1), [&] {
      return "(iv) lambda(g^" + std::to_string(i) + "x^(n-1)) = " + at(i, n - 1).to_string();
    });
  }
  return r;
}

Report shift_rule_checks(const Functional& lambda) {
  const HopfData& H = *lambda.algebra;
  Report r;
  r.title = "shift rules";
  const ParamPoly one(H.one());
  for (const auto& g : H.grouplikes) {
    if (evaluate_on(lambda, g) != one) continue;
    for (std::size_t u = 0; u < H.dim; ++u) {
      ParamPoly lhs = evaluate_on(lambda, multiply_numeric(H, g, basis_vector(H, u)));
      r.check(lhs == lambda.coords[u], [&] {
        return "lambda(g)=1 for g = " + format_sparse(H, g) + " but lambda(g " + H.basis[u] + ") = " + lhs.to_string() +
               " != " + lambda.coords[u].to_string();
      });
    }
  }
  for (const auto& s : H.skew_primitives) {
    ParamPoly lg = evaluate_on(lambda, s.g), lt = evaluate_on(lambda, s.h), lx = evaluate_on(lambda, s.x);
    if (lg == lt) r.check(lx.is_zero(), [&] { return "lambda agrees on the group-likes of " + format_sparse(H, s.x) + " but lambda(x) = " + lx.to_string(); });
    if (lx.is_zero() && lt == one) {
      for (std::size_t u = 0; u < H.dim; ++u) {
        ParamPoly v = evaluate_on(lambda, multiply_numeric(H, s.x, basis_vector(H, u)));
        r.check(v.is_zero(), [&] { return "lambda(x " + H.basis[u] + ") = " + v.to_string() + " should vanish"; });
      }
    }
  }
  return r;
}

Report convolution_idempotence(const Functional& lambda) {
  Report r;
  r.title = "convolution idempotence";
  Functional sq = convolution(lambda, lambda);
  const HopfData& H = *lambda.algebra;
  for (std::size_t i = 0; i < H.dim; ++i)
    r.check(sq.coords[i] == lambda.coords[i], [&] {
      return "(lambda*lambda)(" + H.basis[i] + ") = " + sq.coords[i].to_string() + " vs " + lambda.coords[i].to_string();
    });
  return r;
}

}  // namespace partial_hopf
