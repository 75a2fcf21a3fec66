// Acceptance suite: one line per criterion, each with a pinned time budget.
// A criterion passes only if every check holds exactly and the wall time
// stays within its budget. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "partial_hopf/algebras.hpp"
#include "partial_hopf/classify.hpp"
#include "partial_hopf/duality.hpp"
#include "partial_hopf/partial.hpp"
#include "partial_hopf/qcomb.hpp"
#include "partial_hopf/reference_tables.hpp"

namespace ph = partial_hopf;

namespace {

/// Collects failures for one criterion; keeps the first message for the summary line.
struct Outcome {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  void expect(const ph::Report& r, const std::string& what) {
    expect(r.ok(), what + (r.failures.empty() ? std::string() : ": " + r.failures.front()));
  }
};

struct Criterion {
  int id;
  double budget_seconds;
  std::string summary;
  std::function<void(Outcome&)> run;
};

std::string tag(const std::string& name, int n) { return name + "(" + std::to_string(n) + ")"; }

void hopf_axioms(Outcome& o) {
  for (int n = 2; n <= 8; ++n) {
    o.expect(ph::validate_all(*ph::taft(n)), tag("taft", n));
    o.expect(ph::taft_comultiplication_crosscheck(n), tag("taft coproduct", n));
  }
  for (int n = 2; n <= 6; ++n) o.expect(ph::validate_all(*ph::nichols(n)), tag("nichols", n));
  for (int n = 1; n <= 12; ++n) {
    o.expect(ph::validate_all(*ph::group_algebra_cyclic(n)), tag("groupalg", n));
    o.expect(ph::validate_all(*ph::dual_group_algebra_cyclic(n)), tag("dualgroupalg", n));
  }
}

void action_families(Outcome& o) {
  auto both = [&](const ph::ActionFamily& f, int n) {
    o.expect(ph::verify_partial_action(f.functional), tag(f.name, n) + " partial");
    o.expect(ph::verify_symmetric_action(f.functional), tag(f.name, n) + " symmetric");
  };
  for (int n = 2; n <= 6; ++n) {
    both(ph::taft_lambda_alpha(n), n);
    for (int k : ph::divisors(n)) both(ph::taft_lambda_N0(n, k), n);
  }
  for (int n = 2; n <= 5; ++n) both(ph::nichols_lambda_alpha(n), n);
}

void coaction_families(Outcome& o) {
  auto both = [&](const ph::CoactionFamily& f, int n) {
    o.expect(ph::verify_partial_coaction(f.element), tag(f.name, n) + " partial");
    o.expect(ph::verify_symmetric_coaction(f.element), tag(f.name, n) + " symmetric");
  };
  for (int n = 2; n <= 6; ++n) {
    both(ph::taft_z_alpha(n), n);
    for (int k : ph::divisors(n)) both(ph::taft_z_N(n, k), n);
  }
  for (int n = 2; n <= 5; ++n) both(ph::nichols_z_alpha(n), n);
}

void self_duality(Outcome& o) {
  for (int n = 2; n <= 6; ++n) {
    const auto psi = ph::taft_psi(n), phi = ph::taft_phi(n);
    o.expect(ph::check_algebra_map(psi), tag("taft psi algebra map", n));
    o.expect(ph::check_coalgebra_map(psi), tag("taft psi coalgebra map", n));
    o.expect(ph::check_algebra_map(phi), tag("taft phi algebra map", n));
    o.expect(ph::check_coalgebra_map(phi), tag("taft phi coalgebra map", n));
    o.expect(ph::compose(phi, psi).matrix.is_identity(), tag("phi after psi", n));
    o.expect(ph::compose(psi, phi).matrix.is_identity(), tag("psi after phi", n));
    o.expect(ph::transport(ph::taft_lambda_alpha(n), phi).family.element == ph::taft_z_alpha(n).element,
             tag("phi(lambda_alpha) = z_alpha", n));
    for (int k : ph::divisors(n))
      o.expect(ph::transport(ph::taft_lambda_N0(n, k), phi).family.element == ph::taft_z_N(n, n / k).element,
               tag("phi(lambda0<g^" + std::to_string(k) + ">) = z<g^" + std::to_string(n / k) + ">", n));
  }
  for (int n = 2; n <= 5; ++n) {
    const auto psi = ph::nichols_psi(n);
    o.expect(ph::check_algebra_map(psi), tag("nichols psi algebra map", n));
    o.expect(ph::check_coalgebra_map(psi), tag("nichols psi coalgebra map", n));
    const auto inverse = ph::invert(psi);
    o.expect(ph::compose(inverse, psi).matrix.is_identity(), tag("nichols psi invertible", n));
    o.expect(ph::check_algebra_map(inverse), tag("nichols psi inverse algebra map", n));
    o.expect(ph::check_coalgebra_map(inverse), tag("nichols psi inverse coalgebra map", n));
    o.expect(ph::transport(ph::nichols_lambda_alpha(n), psi).family.element == ph::nichols_z_alpha(n).element,
             tag("nichols transport of lambda_alpha", n));
  }
}

void classification(Outcome& o) {
  auto matches_constructor = [](const ph::ActionFamily& f) {
    for (const auto& k : ph::known_actions(f.algebra))
      if (ph::same_family_up_to_renaming(k, f)) return true;
    return false;
  };
  for (int n = 2; n <= 8; ++n) {
    const auto sol = ph::classify_base_field_actions(ph::taft(n));
    o.expect(sol.exhaustive, tag("taft exhaustive", n));
    o.expect(sol.verification, tag("taft families verify", n));
    o.expect(static_cast<int>(sol.families.size()) == ph::family_count(n),
             tag("taft family count", n) + ": " + std::to_string(sol.families.size()) + " vs " + std::to_string(ph::family_count(n)));
    for (const auto& f : sol.families) o.expect(matches_constructor(f), tag("taft", n) + " family " + f.name + " matches a constructor");
  }
  for (int n = 2; n <= 5; ++n) {
    const auto sol = ph::classify_base_field_actions(ph::nichols(n));
    o.expect(sol.exhaustive, tag("nichols exhaustive", n));
    o.expect(sol.verification, tag("nichols families verify", n));
    o.expect(sol.families.size() == 2, tag("nichols family count", n) + ": " + std::to_string(sol.families.size()));
    std::size_t params = 0;
    for (const auto& f : sol.families) {
      params = std::max(params, f.params.size());
      o.expect(matches_constructor(f), tag("nichols", n) + " family " + f.name + " matches a constructor");
    }
    o.expect(params == static_cast<std::size_t>(n - 1), tag("nichols free parameters", n));
  }
}

void reference_tables(Outcome& o) {
  std::size_t seen = 0;
  for (auto H : {ph::taft(2), ph::taft(3), ph::taft(4), ph::nichols(2), ph::nichols(3), ph::nichols(4), ph::group_algebra_cyclic(4),
                 ph::dual_group_algebra_cyclic(4)})
    for (bool actions : {true, false})
      for (const auto& d : ph::compare_reference_tables(H, actions)) {
        ++seen;
        o.expect(d.compared > 0 && d.mismatches.empty(), d.title + (d.mismatches.empty() ? "" : ": " + d.mismatches.front()));
      }
  o.expect(seen == ph::reference_tables().size(), "every reference table was compared");
}

void identity_suites(Outcome& o) {
  const ph::IdentitySweepConfig cfg;
  const auto report = ph::sweep_identities(cfg);
  for (const auto& s : report.suites) {
    o.expect(s.failed == 0 && s.checked > 0,
             s.suite + " at q = " + s.q_label + (s.failures.empty() ? "" : ": " + s.failures.front()));
    if (s.checked > 1) o.checks += s.checked - 1;  // count individual index tuples
  }
  for (int n = 2; n <= 24; ++n)
    for (int k : ph::divisors(n)) o.expect(ph::check_subgroup_average(n, k, n / k), "subgroup average " + std::to_string(n) + "," + std::to_string(k));
}

void cross_checks(Outcome& o) {
  for (int n = 2; n <= 8; ++n) o.expect(ph::special_value_checks(n), tag("special values", n));
  std::vector<ph::HopfPtr> algebras;
  for (int n = 2; n <= 8; ++n) algebras.push_back(ph::taft(n));
  for (int n = 2; n <= 5; ++n) algebras.push_back(ph::nichols(n));
  for (int n = 2; n <= 12; ++n) {
    algebras.push_back(ph::group_algebra_cyclic(n));
    algebras.push_back(ph::dual_group_algebra_cyclic(n));
  }
  for (const auto& H : algebras)
    for (const auto& f : ph::known_actions(H)) {
      o.expect(ph::shift_rule_checks(f.functional), H->name + " " + f.name + " shift rules");
      o.expect(ph::convolution_idempotence(f.functional), H->name + " " + f.name + " idempotent");
    }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, 10, "Hopf axioms for taft 2..8, nichols 2..6, cyclic group algebras and duals up to 12", hopf_axioms},
      {2, 30, "partial and symmetric partial actions, identically in parameters", action_families},
      {3, 30, "partial and symmetric partial coactions, identically in parameters", coaction_families},
      {4, 20, "self-duality morphisms and transport of actions to coactions", self_duality},
      {5, 60, "classification is exhaustive with the expected family counts", classification},
      {6, 5, "embedded reference tables match exactly", reference_tables},
      {7, 60, "q-binomial identity suites and the subgroup average", identity_suites},
      {8, 20, "special values, shift rules and convolution idempotence", cross_checks},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.budget_seconds;
    const bool pass = error.empty() && o.failures == 0 && in_time;
    failed += pass ? 0 : 1;
    std::printf("criterion %d: %s  %zu checks, %.2f s of %.0f s  %s", c.id, pass ? "PASS" : "FAIL", o.checks, seconds,
                c.budget_seconds, c.summary.c_str());
    if (!error.empty())
      std::printf("  [error: %s]", error.c_str());
    else if (o.failures > 0)
      std::printf("  [%zu failed, first: %s]", o.failures, o.first_failure.c_str());
    else if (!in_time)
      std::printf("  [over budget]");
    std::printf("\n");
    std::fflush(stdout);
  }
  return failed;
}
