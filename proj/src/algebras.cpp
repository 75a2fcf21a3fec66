#include "partial_hopf/algebras.hpp"

#include <bit>
#include <map>
#include <mutex>

#include "partial_hopf/errors.hpp"
#include "partial_hopf/qcomb.hpp"

namespace partial_hopf {

namespace {

std::string power_label(const std::string& base, int e) {
  if (e == 0) return "";
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

/// Memoises built algebras per (kind, n).
HopfPtr cached(const std::string& key, HopfData (*build)(int), int n) {
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

SparseVec single(std::size_t i, CycNumber c) {
  if (c.is_zero()) return {};
  return {{i, std::move(c)}};
}

std::vector<TensorTerm> to_terms(const NumTensor& t) {
  std::vector<TensorTerm> out;
  out.reserve(t.size());
  for (const auto& [k, c] : t) out.push_back(TensorTerm{k.first, k.second, c});
  return out;
}

/// S(a_1 ... a_k) = S(a_k) ... S(a_1) for a word of generator indices.
SparseVec antipode_of_word(const HopfData& H, const std::vector<SparseVec>& generator_images, const std::vector<int>& word) {
  SparseVec acc = H.unit;
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = multiply_numeric(H, acc, generator_images[static_cast<std::size_t>(*it)]);
  return acc;
}

NumTensor coproduct_of_word(const HopfData& H, const std::vector<NumTensor>& generator_images, const std::vector<int>& word) {
  NumTensor acc = tensor_numeric(H.unit, H.unit);
  for (int w : word) acc = multiply_numeric(H, acc, generator_images[static_cast<std::size_t>(w)]);
  return acc;
}

// ------------------------------------------------------------------ Taft

HopfData build_taft(int n) {
  if (n < 2) throw InvalidOrder("Taft algebra needs n >= 2, got " + std::to_string(n));
  HopfData H;
  H.name = "taft(" + std::to_string(n) + ")";
  H.order = n;
  const std::size_t N = static_cast<std::size_t>(n);
  H.dim = N * N;
  auto idx = [&](long i, long j) { return static_cast<std::size_t>(((i % n) + n) % n) * N + static_cast<std::size_t>(j); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      H.basis.push_back(taft_label(i, j));
      H.degrees.push_back(j);
    }

  H.mult.assign(H.dim * H.dim, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (j + l >= n) continue;
          // x^j g^k = q^(jk) g^k x^j
          H.mult[idx(i, j) * H.dim + idx(k, l)] = single(idx(i + k, j + l), zeta_pow(n, static_cast<long>(j) * k));
        }
  H.unit = basis_vector(H, 0);

  QCombinatorics qc(QScalar::concrete(zeta_pow(n, 1)));
  H.comult.assign(H.dim, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l <= j; ++l) {
        CycNumber c = qc.binomial(j, l).as_concrete();
        if (c.is_zero()) continue;
        H.comult[idx(i, j)].push_back(TensorTerm{idx(i + l, j - l), idx(i, l), c});
      }

  H.counit.assign(H.dim, H.zero());
  for (int i = 0; i < n; ++i) H.counit[idx(i, 0)] = H.one();

  // generators: 0 = g, 1 = x
  std::vector<SparseVec> s_gen = {basis_vector(H, idx(n - 1, 0)), single(idx(n - 1, 1), CycNumber(n, -1L))};
  H.antipode.assign(H.dim, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> word(static_cast<std::size_t>(i), 0);
      word.insert(word.end(), static_cast<std::size_t>(j), 1);
      H.antipode[idx(i, j)] = antipode_of_word(H, s_gen, word);
    }

  for (int i = 0; i < n; ++i) H.grouplikes.push_back(basis_vector(H, idx(i, 0)));
  H.skew_primitives.push_back(SkewPrimitive{basis_vector(H, idx(0, 1)), basis_vector(H, idx(0, 0)), basis_vector(H, idx(1, 0))});
  return H;
}

// --------------------------------------------------------------- Nichols

HopfData build_nichols(int n) {
  if (n < 2) throw InvalidOrder("Nichols Hopf algebra needs n >= 2, got " + std::to_string(n));
  if (n > 16) throw InvalidOrder("Nichols Hopf algebra of order " + std::to_string(n) + " is too large");
  HopfData H;
  H.name = "nichols(" + std::to_string(n) + ")";
  H.order = 2;
  H.dim = std::size_t{1} << n;
  for (unsigned b = 0; b < H.dim; ++b) {
    H.basis.push_back(nichols_label(b));
    H.degrees.push_back(std::popcount(b >> 1));
  }

  H.mult.assign(H.dim * H.dim, {});
  for (unsigned a = 0; a < H.dim; ++a)
    for (unsigned b = 0; b < H.dim; ++b) {
      auto [sign, c] = nichols_monomial_product(a, b);
      if (sign != 0) H.mult[a * H.dim + b] = single(c, CycNumber(2, static_cast<long>(sign)));
    }
  H.unit = basis_vector(H, 0);

  // generators: 0 = g, i = x_i
  const SparseVec g = basis_vector(H, 1);
  std::vector<NumTensor> delta_gen;
  std::vector<SparseVec> s_gen;
  delta_gen.push_back(tensor_numeric(g, g));
  s_gen.push_back(g);
  for (int i = 1; i < n; ++i) {
    SparseVec x = basis_vector(H, std::size_t{1} << i);
    NumTensor d = tensor_numeric(x, H.unit);
    for (const auto& [k, c] : tensor_numeric(g, x)) d.emplace(k, c);
    delta_gen.push_back(std::move(d));
    s_gen.push_back(single((std::size_t{1} << i) | 1U, CycNumber(2, -1L)));
  }

  H.comult.assign(H.dim, {});
  H.antipode.assign(H.dim, {});
  H.counit.assign(H.dim, H.zero());
  for (unsigned b = 0; b < H.dim; ++b) {
    std::vector<int> word;
    if (b & 1U) word.push_back(0);
    for (int i = 1; i < n; ++i)
      if (b & (1U << i)) word.push_back(i);
    H.comult[b] = to_terms(coproduct_of_word(H, delta_gen, word));
    H.antipode[b] = antipode_of_word(H, s_gen, word);
    if ((b >> 1) == 0) H.counit[b] = H.one();
  }

  H.grouplikes = {basis_vector(H, 0), g};
  for (int i = 1; i < n; ++i)
    H.skew_primitives.push_back(SkewPrimitive{basis_vector(H, std::size_t{1} << i), H.unit, g});
  return H;
}

// ----------------------------------------------------------- group algebra

HopfData build_group_algebra(int n) {
  if (n < 1) throw InvalidOrder("cyclic group order must be >= 1, got " + std::to_string(n));
  HopfData H;
  H.name = "groupalg(" + std::to_string(n) + ")";
  H.order = n;
  H.dim = static_cast<std::size_t>(n);
  for (int i = 0; i < n; ++i) {
    H.basis.push_back(i == 0 ? "1" : power_label("g", i));
    H.degrees.push_back(0);
  }
  H.mult.assign(H.dim * H.dim, {});
  for (std::size_t i = 0; i < H.dim; ++i)
    for (std::size_t j = 0; j < H.dim; ++j) H.mult[i * H.dim + j] = basis_vector(H, (i + j) % H.dim);
  H.unit = basis_vector(H, 0);
  H.comult.assign(H.dim, {});
  H.antipode.assign(H.dim, {});
  H.counit.assign(H.dim, H.one());
  for (std::size_t i = 0; i < H.dim; ++i) {
    H.comult[i].push_back(TensorTerm{i, i, H.one()});
    H.antipode[i] = basis_vector(H, (H.dim - i) % H.dim);
    H.grouplikes.push_back(basis_vector(H, i));
  }
  return H;
}

HopfData build_dual_group_algebra(int n) {
  HopfData D = dual_hopf(*group_algebra_cyclic(n));
  D.name = "dualgroupalg(" + std::to_string(n) + ")";
  for (int k = 0; k < n; ++k) {
    SparseVec chi;
    for (int i = 0; i < n; ++i) chi.emplace_back(static_cast<std::size_t>(i), zeta_pow(n, static_cast<long>(i) * k));
    D.grouplikes.push_back(std::move(chi));
  }
  return D;
}

}  // namespace

std::string taft_label(int i, int j) {
  if (i == 0 && j == 0) return "1";
  return power_label("g", i) + power_label("x", j);
}

std::string nichols_label(unsigned bits) {
  if (bits == 0) return "1";
  std::string s = (bits & 1U) ? "g" : "";
  for (int i = 1; (bits >> i) != 0; ++i)
    if (bits & (1U << i)) s += "x" + std::to_string(i);
  return s;
}

std::pair<int, unsigned> nichols_monomial_product(unsigned a, unsigned b) {
  const unsigned ax = a & ~1U;
  const unsigned bx = b & ~1U;
  if (ax & bx) return {0, 0};
  int sign = 1;
  // moving g^(b0) left past the x's of a: one sign per x
  if ((b & 1U) && (std::popcount(ax) % 2 == 1)) sign = -sign;
  // sorting x_a x_b: one sign per pair (i in a, j in b) with i > j
  int inversions = 0;
  for (unsigned rest = bx; rest != 0; rest &= rest - 1) {
    unsigned j = static_cast<unsigned>(std::countr_zero(rest));
    inversions += std::popcount(ax >> (j + 1));
  }
  if (inversions % 2 == 1) sign = -sign;
  return {sign, ((a ^ b) & 1U) | ax | bx};
}

HopfPtr taft(int n) { return cached("taft" + std::to_string(n), build_taft, n); }
HopfPtr nichols(int n) { return cached("nichols" + std::to_string(n), build_nichols, n); }
HopfPtr group_algebra_cyclic(int n) { return cached("groupalg" + std::to_string(n), build_group_algebra, n); }
HopfPtr dual_group_algebra_cyclic(int n) { return cached("dualgroupalg" + std::to_string(n), build_dual_group_algebra, n); }

Report taft_comultiplication_crosscheck(int n) {
  HopfPtr T = taft(n);
  const HopfData& H = *T;
  const std::size_t N = static_cast<std::size_t>(n);
  const SparseVec g = basis_vector(H, N);
  const SparseVec x = basis_vector(H, 1);
  NumTensor dx = tensor_numeric(x, H.unit);
  for (const auto& [k, c] : tensor_numeric(g, x)) dx.emplace(k, c);
  std::vector<NumTensor> gens = {tensor_numeric(g, g), dx};

  Report r;
  r.title = "taft comultiplication cross-check";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> word(static_cast<std::size_t>(i), 0);
      word.insert(word.end(), static_cast<std::size_t>(j), 1);
      NumTensor expected = coproduct_of_word(H, gens, word);
      NumTensor stored = comultiply_numeric(H, basis_vector(H, static_cast<std::size_t>(i) * N + static_cast<std::size_t>(j)));
      r.check(expected == stored, [&] { return "delta(" + taft_label(i, j) + ") differs from delta(g)^i delta(x)^j"; });
    }
  return r;
}

}  // namespace partial_hopf
