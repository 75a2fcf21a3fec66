// partial-hopf: command-line front end.
// Exit codes: 0 success, 1 mathematical failure, 2 usage or IO failure.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "partial_hopf/algebras.hpp"
#include "partial_hopf/classify.hpp"
#include "partial_hopf/duality.hpp"
#include "partial_hopf/errors.hpp"
#include "partial_hopf/json_io.hpp"
#include "partial_hopf/parallel.hpp"
#include "partial_hopf/partial.hpp"
#include "partial_hopf/qcomb.hpp"
#include "partial_hopf/reference_tables.hpp"

namespace ph = partial_hopf;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsageFailure = 2;

/// Thrown for anything that is the caller's fault: bad algebra spec, unreadable file.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string output = "text";
  std::vector<std::string> algebra;
  bool paper_examples = false;
  int n = 8;
  std::optional<long> max;
  std::string out_path;
  bool no_shortcuts = false;
  std::size_t branch_cap = 64;
  bool json() const { return output == "json"; }
};

class Timer {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int parse_order(const std::string& text) {
  try {
    std::size_t used = 0;
    int n = std::stoi(text, &used);
    if (used != text.size()) throw UsageError("not an integer: " + text);
    return n;
  } catch (const std::logic_error&) {
    throw UsageError("not an integer: " + text);
  }
}

/// "taft 4", "taft(4)", "file path.json", "dualtaft 3", ...
ph::HopfPtr resolve(const std::vector<std::string>& spec) {
  if (spec.empty()) throw UsageError("missing algebra: expected e.g. 'taft 4', 'nichols 3' or 'file algebra.json'");
  std::string kind = spec[0];
  std::string arg;
  if (auto open = kind.find('('); open != std::string::npos && kind.back() == ')') {
    arg = kind.substr(open + 1, kind.size() - open - 2);
    kind = kind.substr(0, open);
  } else if (spec.size() >= 2) {
    arg = spec[1];
  }
  if (spec.size() > 2) throw UsageError("too many algebra arguments");
  if (arg.empty()) throw UsageError("algebra '" + kind + "' needs an argument");
  try {
    if (kind == "file") return std::make_shared<const ph::HopfData>(ph::load_hopf_file(arg));
    int n = parse_order(arg);
    if (kind == "taft") return ph::taft(n);
    if (kind == "nichols") return ph::nichols(n);
    if (kind == "groupalg") return ph::group_algebra_cyclic(n);
    if (kind == "dualgroupalg") return ph::dual_group_algebra_cyclic(n);
    if (kind == "dualtaft") return ph::taft_dual(n);
    if (kind == "dualnichols") return ph::nichols_dual(n);
  } catch (const ph::Error& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown algebra kind '" + kind + "' (taft, nichols, groupalg, dualgroupalg, dualtaft, dualnichols, file)");
}

json report_json(const ph::Report& r) {
  return {{"title", r.title}, {"checked", r.checked}, {"failed", r.failed}, {"failures", r.failures}};
}

void print_report(std::ostream& os, const ph::Report& r, const std::string& indent = "  ") {
  os << indent << (r.ok() ? "ok   " : "FAIL ") << r.title << ": " << r.checked << " checks";
  if (!r.ok()) os << ", " << r.failed << " failed";
  os << "\n";
  for (const auto& f : r.failures) os << indent << "     " << f << "\n";
}

json coords_json(const ph::HopfData& H, const std::vector<ph::ParamPoly>& coords) {
  json out = json::object();
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) out[H.basis[i]] = coords[i].to_string("z");
  return out;
}

json algebra_header(const ph::HopfData& H) { return {{"name", H.name}, {"dim", H.dim}, {"order", H.order}}; }

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// ---------------------------------------------------------------- commands

int cmd_validate(const Options& o) {
  Timer timer;
  ph::HopfPtr H = resolve(o.algebra);
  std::vector<ph::Report> reports;
  ph::Report shape = ph::validate_shape(*H);
  shape.title = "shape";
  reports.push_back(shape);
  if (shape.ok()) {
    reports.push_back(ph::validate_bialgebra(*H));
    reports.back().title = "bialgebra axioms";
    reports.push_back(ph::validate_antipode(*H));
    reports.back().title = "antipode";
    reports.push_back(ph::validate_metadata(*H));
    reports.back().title = "group-like and skew-primitive metadata";
    if (H->name.rfind("taft(", 0) == 0 && H == ph::taft(H->order))
      reports.push_back(ph::taft_comultiplication_crosscheck(H->order));
  }
  bool ok = std::all_of(reports.begin(), reports.end(), [](const ph::Report& r) { return r.ok(); });
  double secs = timer.seconds();

  json j = algebra_header(*H);
  j["command"] = "validate";
  j["ok"] = ok;
  j["seconds"] = secs;
  j["reports"] = json::array();
  std::ostringstream os;
  os << H->name << ": dim " << H->dim << ", scalars Q(zeta_" << H->order << ")\n";
  for (const auto& r : reports) {
    j["reports"].push_back(report_json(r));
    print_report(os, r);
  }
  os << (ok ? "PASS" : "FAIL") << " in " << secs << " s\n";
  emit(o, j, os.str());
  return ok ? kOk : kMathFailure;
}

int diff_tables(const Options& o, const ph::HopfPtr& H, bool actions, json& j, std::ostream& os) {
  auto diffs = ph::compare_reference_tables(H, actions);
  bool ok = true;
  j["reference_tables"] = json::array();
  if (diffs.empty()) os << "no reference tables for " << H->name << "\n";
  for (const auto& d : diffs) {
    ok = ok && d.mismatches.empty();
    j["reference_tables"].push_back({{"title", d.title}, {"compared", d.compared}, {"mismatches", d.mismatches}});
    os << "  " << (d.mismatches.empty() ? "match " : "DIFF  ") << d.title << " (" << d.compared << " coefficients)\n";
    for (const auto& m : d.mismatches) os << "        " << m << "\n";
  }
  (void)o;
  return ok ? kOk : kMathFailure;
}

int cmd_actions(const Options& o) {
  Timer timer;
  ph::HopfPtr H = resolve(o.algebra);
  auto families = ph::known_actions(H);
  json j = algebra_header(*H);
  j["command"] = "actions";
  j["families"] = json::array();
  std::ostringstream os;
  bool ok = true;
  os << H->name << ": " << families.size() << " partial action families\n";
  for (const auto& f : families) {
    ph::Report partial = ph::verify_partial_action(f.functional);
    partial.title = "partial action";
    ph::Report symmetric = ph::verify_symmetric_action(f.functional);
    symmetric.title = "symmetric";
    ok = ok && partial.ok() && symmetric.ok();
    j["families"].push_back({{"name", f.name},
                             {"params", f.params},
                             {"values", coords_json(*H, f.functional.coords)},
                             {"checks", {report_json(partial), report_json(symmetric)}}});
    os << f.name;
    if (!f.params.empty()) {
      os << " [";
      for (std::size_t k = 0; k < f.params.size(); ++k) os << (k ? ", " : "") << f.params[k];
      os << "]";
    }
    os << " = " << ph::functional_to_string(f.functional) << "\n";
    print_report(os, partial);
    print_report(os, symmetric);
  }
  if (o.paper_examples && diff_tables(o, H, true, j, os) != kOk) ok = false;
  j["ok"] = ok;
  j["seconds"] = timer.seconds();
  os << (ok ? "PASS" : "FAIL") << " in " << timer.seconds() << " s\n";
  emit(o, j, os.str());
  return ok ? kOk : kMathFailure;
}

int cmd_coactions(const Options& o) {
  Timer timer;
  ph::HopfPtr H = resolve(o.algebra);
  auto families = ph::known_coactions(H);
  json j = algebra_header(*H);
  j["command"] = "coactions";
  j["families"] = json::array();
  std::ostringstream os;
  bool ok = true;
  os << H->name << ": " << families.size() << " partial coaction families\n";
  for (const auto& f : families) {
    ph::Report partial = ph::verify_partial_coaction(f.element);
    partial.title = "partial coaction";
    ph::Report symmetric = ph::verify_symmetric_coaction(f.element);
    symmetric.title = "symmetric";
    ok = ok && partial.ok() && symmetric.ok();
    j["families"].push_back({{"name", f.name},
                             {"params", f.params},
                             {"element", coords_json(*H, f.element.coords)},
                             {"checks", {report_json(partial), report_json(symmetric)}}});
    os << f.name << " = " << ph::element_to_string(f.element) << "\n";
    print_report(os, partial);
    print_report(os, symmetric);
  }
  if (o.paper_examples && diff_tables(o, H, false, j, os) != kOk) ok = false;
  j["ok"] = ok;
  j["seconds"] = timer.seconds();
  os << (ok ? "PASS" : "FAIL") << " in " << timer.seconds() << " s\n";
  emit(o, j, os.str());
  return ok ? kOk : kMathFailure;
}

int cmd_classify(const Options& o) {
  Timer timer;
  ph::HopfPtr H = resolve(o.algebra);
  ph::ClassifyOptions co;
  co.use_shortcuts = !o.no_shortcuts;
  co.branch_cap = o.branch_cap;
  co.jobs = ph::default_jobs();
  ph::SolutionSet s = ph::classify_base_field_actions(H, co);
  bool ok = s.exhaustive && s.verification.ok();

  json j = algebra_header(*H);
  j["command"] = "classify";
  j["exhaustive"] = s.exhaustive;
  j["families"] = json::array();
  for (const auto& f : s.families)
    j["families"].push_back({{"name", f.name}, {"params", f.params}, {"values", coords_json(*H, f.functional.coords)}});
  j["branches"] = json::array();
  for (const auto& b : s.branches)
    j["branches"].push_back({{"trail", b.trail}, {"status", b.status}, {"detail", b.detail}, {"family", b.family}});
  j["grouplike_derivation"] = s.grouplikes.derivation;
  j["verification"] = report_json(s.verification);
  j["ok"] = ok;
  j["seconds"] = timer.seconds();

  std::ostringstream os;
  os << H->name << ": " << s.families.size() << " families, exhaustive = " << (s.exhaustive ? "true" : "false") << "\n";
  for (const auto& f : s.families) {
    os << "  " << f.name << " (" << f.params.size() << " free parameter" << (f.params.size() == 1 ? "" : "s");
    for (std::size_t k = 0; k < f.params.size(); ++k) os << (k ? ", " : ": ") << f.params[k];
    os << ") = " << ph::functional_to_string(f.functional) << "\n";
  }
  os << "group-like derivation:\n";
  for (const auto& line : s.grouplikes.derivation) os << "  " << line << "\n";
  os << "branches:\n";
  for (const auto& b : s.branches) {
    os << "  [" << b.status << "]";
    for (const auto& t : b.trail) os << " " << t << ";";
    if (b.family >= 0) os << " -> " << s.families[static_cast<std::size_t>(b.family)].name;
    if (!b.detail.empty()) os << " (" << b.detail << ")";
    os << "\n";
  }
  print_report(os, s.verification);
  os << (ok ? "PASS" : "FAIL") << " in " << timer.seconds() << " s\n";
  emit(o, j, os.str());
  return ok ? kOk : kMathFailure;
}

int cmd_identities(const Options& o) {
  Timer timer;
  if (o.n < 2) throw UsageError("--n must be at least 2");
  ph::IdentitySweepConfig config;
  if (o.max) {
    if (*o.max < 0) throw UsageError("--max must be nonnegative");
    config = ph::IdentitySweepConfig::uniform(*o.max, o.n);
  }
  config.root_order_max = o.n;
  ph::IdentitySweepReport sweep = ph::sweep_identities(config);

  ph::Report average;
  average.title = "subgroup_average";
  for (int n = 1; n <= o.n; ++n)
    for (int k : ph::divisors(n)) average.merge(ph::check_subgroup_average(n, k, n / k));
  average.title = "subgroup_average";

  bool ok = sweep.all_passed() && average.ok();
  json j;
  j["command"] = "identities";
  j["suites"] = json::array();
  std::ostringstream os;
  std::size_t failed_total = 0;
  for (const auto& r : sweep.suites) {
    failed_total += r.failed;
    j["suites"].push_back({{"suite", r.suite}, {"q", r.q_label}, {"checked", r.checked}, {"failed", r.failed}, {"failures", r.failures}});
    if (r.failed != 0) {
      os << "  FAIL " << r.suite << " at q = " << r.q_label << ": " << r.failed << " of " << r.checked + r.failed << "\n";
      for (const auto& f : r.failures) os << "       " << f << "\n";
    }
  }
  // Per-suite totals keep text output short.
  std::map<std::string, std::pair<std::size_t, std::size_t>> totals;
  std::vector<std::string> order;
  for (const auto& r : sweep.suites) {
    if (!totals.count(r.suite)) order.push_back(r.suite);
    totals[r.suite].first += r.checked;
    totals[r.suite].second += r.failed;
  }
  for (const auto& name : order)
    os << "  " << (totals[name].second ? "FAIL " : "ok   ") << name << ": " << totals[name].first << " checks\n";
  print_report(os, average);
  j["subgroup_average"] = report_json(average);
  j["checked"] = sweep.total_checked() + average.checked;
  j["failed"] = failed_total + average.failed;
  j["ok"] = ok;
  j["seconds"] = timer.seconds();
  os << (ok ? "PASS" : "FAIL") << ": " << sweep.total_checked() + average.checked << " checks in " << timer.seconds() << " s\n";
  emit(o, j, os.str());
  return ok ? kOk : kMathFailure;
}

int cmd_duality(const Options& o) {
  Timer timer;
  ph::HopfPtr H = resolve(o.algebra);
  std::string kind = H->name.substr(0, H->name.find('('));
  if (kind != "taft" && kind != "nichols") throw UsageError("duality is available for taft and nichols algebras");
  const int n = kind == "taft" ? H->order : static_cast<int>(std::countr_zero(H->dim));

  std::vector<ph::Report> reports;
  ph::HopfMorphism psi = kind == "taft" ? ph::taft_psi(n) : ph::nichols_psi(n);
  ph::HopfMorphism to_h = kind == "taft" ? ph::taft_phi(n) : ph::invert(psi);
  auto named = [](ph::Report r, std::string title) {
    r.title = std::move(title);
    return r;
  };
  reports.push_back(named(ph::check_algebra_map(psi), "psi is an algebra map"));
  reports.push_back(named(ph::check_coalgebra_map(psi), "psi is a coalgebra map"));
  reports.push_back(named(ph::check_algebra_map(to_h), "phi is an algebra map"));
  reports.push_back(named(ph::check_coalgebra_map(to_h), "phi is a coalgebra map"));
  {
    ph::Report r;
    r.title = "phi o psi = id and psi o phi = id";
    r.record(ph::compose(to_h, psi).matrix.is_identity(), "phi o psi is not the identity");
    r.record(ph::compose(psi, to_h).matrix.is_identity(), "psi o phi is not the identity");
    reports.push_back(r);
  }

  json j = algebra_header(*H);
  j["command"] = "duality";
  j["transported"] = json::array();
  std::ostringstream os;
  os << H->name << " self-duality\n";
  ph::Report closed;
  closed.title = "transported actions match the closed-form coactions";
  for (const auto& f : ph::known_actions(H)) {
    ph::TransportResult t = ph::transport(f, to_h);
    std::optional<ph::CoactionFamily> expected;
    if (f.name == "eps") expected = ph::unit_coaction(H);
    else if (f.name == "lambda_alpha") expected = kind == "taft" ? ph::taft_z_alpha(n) : ph::nichols_z_alpha(n);
    else if (f.name.rfind("lambda0<g", 0) == 0) {
      // lambda0 on <g^k> goes to the average over <g^(n/k)>.
      std::string label = f.name.substr(std::string("lambda0<g").size());
      int k = label == ">" ? 1 : parse_order(label.substr(1, label.size() - 2));
      expected = ph::taft_z_N(n, n / k);
    }
    bool match = expected && t.family.element == expected->element;
    closed.record(match, "phi(" + f.name + ") does not match " + (expected ? expected->name : std::string("any closed form")));
    auto back = ph::push_forward(psi, t.family.element.coords);
    closed.record(back == f.functional.coords, "psi(phi(" + f.name + ")) != " + f.name);
    closed.merge(t.partial);
    closed.merge(t.symmetric);
    j["transported"].push_back({{"action", f.name},
                                {"coaction", expected ? expected->name : ""},
                                {"element", coords_json(*H, t.family.element.coords)},
                                {"matches", match}});
    os << "  phi(" << f.name << ") = " << ph::element_to_string(t.family.element) << "   "
       << (match ? "== " + expected->name : std::string("MISMATCH")) << "\n";
  }
  reports.push_back(closed);
  if (kind == "taft") {
    ph::Report avg;
    for (int k : ph::divisors(n)) avg.merge(ph::check_subgroup_average(n, k, n / k));
    avg.title = "subgroup averages";
    reports.push_back(avg);
  }
  bool ok = std::all_of(reports.begin(), reports.end(), [](const ph::Report& r) { return r.ok(); });
  j["reports"] = json::array();
  for (const auto& r : reports) {
    j["reports"].push_back(report_json(r));
    print_report(os, r);
  }
  j["ok"] = ok;
  j["seconds"] = timer.seconds();
  os << (ok ? "PASS" : "FAIL") << " in " << timer.seconds() << " s\n";
  emit(o, j, os.str());
  return ok ? kOk : kMathFailure;
}

int cmd_export(const Options& o) {
  ph::HopfPtr H = resolve(o.algebra);
  if (o.out_path.empty()) {
    std::cout << ph::hopf_to_json_string(*H) << "\n";
  } else {
    try {
      ph::export_hopf(*H, o.out_path);
    } catch (const ph::ParseError& e) {
      throw UsageError(e.what());
    }
    if (!o.json()) std::cerr << "wrote " << H->name << " to " << o.out_path << "\n";
  }
  return kOk;
}

int cmd_import(const Options& o) {
  Timer timer;
  if (o.algebra.size() != 1) throw UsageError("import takes one path");
  ph::HopfData H;
  try {
    H = ph::load_hopf_file(o.algebra[0]);
  } catch (const ph::ParseError& e) {
    throw UsageError(e.what());
  }
  ph::Report r = ph::validate_all(H);
  r.title = "all axioms and metadata";
  json j = algebra_header(H);
  j["command"] = "import";
  j["ok"] = r.ok();
  j["report"] = report_json(r);
  j["seconds"] = timer.seconds();
  std::ostringstream os;
  os << o.algebra[0] << ": " << H.name << ", dim " << H.dim << ", scalars Q(zeta_" << H.order << ")\n";
  print_report(os, r);
  os << (r.ok() ? "accepted" : "rejected") << "\n";
  emit(o, j, os.str());
  return r.ok() ? kOk : kMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional Hopf algebras and their partial (co)actions on the base field"};
  app.require_subcommand(1);
  Options o;
  unsigned jobs = 0;
  app.add_option("--output", o.output, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", jobs, "Worker threads (default: PARTIAL_HOPF_JOBS or 1)")->check(CLI::PositiveNumber);

  const char* algebra_help = "Algebra: taft N | nichols N | groupalg N | dualgroupalg N | dualtaft N | dualnichols N | file PATH";
  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    // Global flags may also follow the subcommand.
    sub->fallthrough();
    return sub;
  };
  auto* validate = add("validate", "Check every Hopf algebra axiom on the basis");
  validate->add_option("algebra", o.algebra, algebra_help)->required();
  auto* actions = add("actions", "List and verify the partial actions on the base field");
  actions->add_option("algebra", o.algebra, algebra_help)->required();
  actions->add_flag("--paper-examples", o.paper_examples, "Diff against the built-in reference tables");
  auto* coactions = add("coactions", "List and verify the partial coactions on the base field");
  coactions->add_option("algebra", o.algebra, algebra_help)->required();
  coactions->add_flag("--paper-examples", o.paper_examples, "Diff against the built-in reference tables");
  auto* classify = add("classify", "Re-derive all partial actions by constraint propagation");
  classify->add_option("algebra", o.algebra, algebra_help)->required();
  classify->add_flag("--no-shortcuts", o.no_shortcuts, "Disable the derived shortcut constraints");
  classify->add_option("--branch-cap", o.branch_cap, "Maximum number of case-split leaves")->check(CLI::PositiveNumber);
  auto* identities = add("identities", "Exhaustive sweep of the q-binomial identities");
  identities->add_option("--n", o.n, "Largest root-of-unity order visited");
  identities->add_option("--max", o.max, "Uniform upper bound on every sweep index");
  auto* duality = add("duality", "Check the self-duality isomorphisms and transport actions to coactions");
  duality->add_option("algebra", o.algebra, algebra_help)->required();
  auto* exporter = add("export", "Write an algebra as JSON");
  exporter->add_option("algebra", o.algebra, algebra_help)->required();
  exporter->add_option("-o,--out", o.out_path, "Output file (default: stdout)");
  auto* importer = add("import", "Read a JSON algebra and validate it");
  importer->add_option("path", o.algebra, "JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageFailure;
  }

  if (jobs != 0) ph::set_default_jobs(jobs);

  try {
    if (validate->parsed()) return cmd_validate(o);
    if (actions->parsed()) return cmd_actions(o);
    if (coactions->parsed()) return cmd_coactions(o);
    if (classify->parsed()) return cmd_classify(o);
    if (identities->parsed()) return cmd_identities(o);
    if (duality->parsed()) return cmd_duality(o);
    if (exporter->parsed()) return cmd_export(o);
    if (importer->parsed()) return cmd_import(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageFailure;
  } catch (const ph::Error& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kMathFailure;
  }
  return kUsageFailure;
}
