// Python bindings. Algebras are opaque handles; families, reports and
// classification results come back as plain dicts with exact coefficients
// written as strings in z (the primitive root of the scalar field).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "partial_hopf/algebras.hpp"
#include "partial_hopf/classify.hpp"
#include "partial_hopf/duality.hpp"
#include "partial_hopf/errors.hpp"
#include "partial_hopf/json_io.hpp"
#include "partial_hopf/partial.hpp"
#include "partial_hopf/qcomb.hpp"
#include "partial_hopf/reference_tables.hpp"

namespace py = pybind11;
namespace ph = partial_hopf;

namespace {

ph::HopfPtr make_algebra(const std::string& kind, int n) {
  if (kind == "taft") return ph::taft(n);
  if (kind == "nichols") return ph::nichols(n);
  if (kind == "groupalg") return ph::group_algebra_cyclic(n);
  if (kind == "dualgroupalg") return ph::dual_group_algebra_cyclic(n);
  if (kind == "dualtaft") return ph::taft_dual(n);
  if (kind == "dualnichols") return ph::nichols_dual(n);
  throw py::value_error("unknown algebra kind: " + kind);
}

py::dict report_dict(const ph::Report& r) {
  py::dict d;
  d["title"] = r.title;
  d["ok"] = r.ok();
  d["checked"] = r.checked;
  d["failed"] = r.failed;
  d["failures"] = r.failures;
  return d;
}

py::dict coords_dict(const ph::HopfData& H, const std::vector<ph::ParamPoly>& coords) {
  py::dict d;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) d[py::str(H.basis[i])] = coords[i].to_string("z");
  return d;
}

py::dict action_dict(const ph::ActionFamily& f) {
  py::dict d;
  d["name"] = f.name;
  d["params"] = f.params;
  d["values"] = coords_dict(*f.algebra, f.functional.coords);
  d["partial"] = report_dict(ph::verify_partial_action(f.functional));
  d["symmetric"] = report_dict(ph::verify_symmetric_action(f.functional));
  return d;
}

py::dict coaction_dict(const ph::CoactionFamily& f) {
  py::dict d;
  d["name"] = f.name;
  d["params"] = f.params;
  d["element"] = coords_dict(*f.algebra, f.element.coords);
  d["partial"] = report_dict(ph::verify_partial_coaction(f.element));
  d["symmetric"] = report_dict(ph::verify_symmetric_coaction(f.element));
  return d;
}

ph::QScalar q_value(int order) {
  if (order == 0) return ph::QScalar::generic();
  return ph::QScalar::concrete(ph::zeta_pow(order, 1));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Hopf algebra computations: Taft, Nichols and cyclic group algebras, partial (co)actions on the base field";

  py::register_exception<ph::Error>(m, "Error", PyExc_ValueError);

  py::class_<ph::HopfData, std::shared_ptr<ph::HopfData>>(m, "Algebra")
      .def_readonly("name", &ph::HopfData::name)
      .def_readonly("dim", &ph::HopfData::dim)
      .def_readonly("order", &ph::HopfData::order)
      .def_readonly("basis", &ph::HopfData::basis)
      .def("__repr__", [](const ph::HopfData& H) { return "<Algebra " + H.name + ", dim " + std::to_string(H.dim) + ">"; });

  // HopfPtr holds a const object; the Python side never mutates it.
  auto wrap = [](ph::HopfPtr H) { return std::const_pointer_cast<ph::HopfData>(H); };
  auto unwrap = [](const std::shared_ptr<ph::HopfData>& H) -> ph::HopfPtr { return H; };

  m.def("algebra", [wrap](const std::string& kind, int n) { return wrap(make_algebra(kind, n)); }, py::arg("kind"), py::arg("n"),
        "Built-in algebra: taft, nichols, groupalg, dualgroupalg, dualtaft or dualnichols.");

  m.def("validate", [](const std::shared_ptr<ph::HopfData>& H) { return report_dict(ph::validate_all(*H)); }, py::arg("algebra"));

  m.def("known_actions", [unwrap](const std::shared_ptr<ph::HopfData>& H) {
    py::list out;
    for (const auto& f : ph::known_actions(unwrap(H))) out.append(action_dict(f));
    return out;
  });

  m.def("known_coactions", [unwrap](const std::shared_ptr<ph::HopfData>& H) {
    py::list out;
    for (const auto& f : ph::known_coactions(unwrap(H))) out.append(coaction_dict(f));
    return out;
  });

  m.def(
      "classify",
      [unwrap](const std::shared_ptr<ph::HopfData>& H, bool use_shortcuts, unsigned jobs) {
        ph::ClassifyOptions opts;
        opts.use_shortcuts = use_shortcuts;
        if (jobs > 0) opts.jobs = jobs;
        ph::SolutionSet sol;
        {
          py::gil_scoped_release release;
          sol = ph::classify_base_field_actions(unwrap(H), opts);
        }
        py::dict d;
        d["exhaustive"] = sol.exhaustive;
        d["verification"] = report_dict(sol.verification);
        py::list fams;
        for (const auto& f : sol.families) fams.append(action_dict(f));
        d["families"] = fams;
        return d;
      },
      py::arg("algebra"), py::arg("use_shortcuts") = true, py::arg("jobs") = 0);

  m.def("family_count", &ph::family_count, py::arg("n"));

  m.def(
      "q_binomial", [](long mm, long l, int order) { return ph::q_binomial(mm, l, q_value(order)).to_string(); }, py::arg("m"),
      py::arg("l"), py::arg("order") = 0, "Gaussian binomial at q = zeta_order, or in generic q when order is 0.");

  m.def(
      "check_identity",
      [](const std::string& name, std::vector<long> indices, int order) {
        auto id = ph::identity_from_name(name);
        if (!id) throw py::value_error("unknown identity: " + name);
        return ph::check_identity(*id, indices, q_value(order)).pass;
      },
      py::arg("name"), py::arg("indices"), py::arg("order") = 0);

  m.def(
      "duality_check",
      [](int n) {
        const auto psi = ph::taft_psi(n), phi = ph::taft_phi(n);
        py::dict d;
        d["psi_algebra"] = report_dict(ph::check_algebra_map(psi));
        d["psi_coalgebra"] = report_dict(ph::check_coalgebra_map(psi));
        d["inverse"] = ph::compose(phi, psi).matrix.is_identity();
        d["transport_matches"] = ph::transport(ph::taft_lambda_alpha(n), phi).family.element == ph::taft_z_alpha(n).element;
        return d;
      },
      py::arg("n"), "Self-duality checks for the Taft algebra of order n.");

  m.def("to_json", [](const std::shared_ptr<ph::HopfData>& H) { return ph::hopf_to_json_string(*H); });
  m.def("from_json", [](const std::string& text) { return std::make_shared<ph::HopfData>(ph::hopf_from_json_string(text)); },
        "Decodes a JSON algebra; call validate() to check the axioms.");

  m.def("reference_mismatches", [unwrap](const std::shared_ptr<ph::HopfData>& H) {
    py::list out;
    for (bool actions : {true, false})
      for (const auto& d : ph::compare_reference_tables(unwrap(H), actions))
        for (const auto& line : d.mismatches) out.append(d.title + ": " + line);
    return out;
  });
}
