#include "partial_hopf/reference_tables.hpp"

#include <algorithm>
#include <map>

#include "partial_hopf/expression.hpp"
#include "partial_hopf/partial.hpp"

namespace partial_hopf {

const std::vector<ReferenceTable>& reference_tables() {
  static const std::vector<ReferenceTable> tables = {
      // Sweedler algebra, seen as taft(2) and as nichols(2).
      {"Sweedler actions", "taft(2)", true, "lambda_alpha", {"a"}, {{"1", "1"}, {"g", "0"}, {"x", "a"}, {"gx", "a"}}},
      {"Sweedler actions (Nichols basis)", "nichols(2)", true, "lambda_alpha", {"a"}, {{"1", "1"}, {"g", "0"}, {"x1", "a"}, {"gx1", "a"}}},
      {"Sweedler coactions", "taft(2)", false, "z_alpha", {"a"}, {{"1", "1/2"}, {"g", "1/2"}, {"gx", "-a"}}},
      {"Sweedler coactions (Nichols basis)", "nichols(2)", false, "z_alpha", {"a"}, {{"1", "1/2"}, {"g", "1/2"}, {"gx1", "-a"}}},

      {"T3 actions",
       "taft(3)",
       true,
       "lambda_alpha",
       {"a"},
       {{"1", "1"}, {"g", "0"}, {"g^2", "0"}, {"x", "a"}, {"gx", "0"}, {"g^2x", "-q*a"}, {"x^2", "a^2"}, {"gx^2", "a^2"}, {"g^2x^2", "a^2"}}},
      {"T3 coactions",
       "taft(3)",
       false,
       "z_alpha",
       {"a"},
       {{"1", "1/3"}, {"g", "1/3"}, {"g^2", "1/3"}, {"gx", "(q-1)*a/3"}, {"g^2x", "(q^2-1)*a/3"}, {"gx^2", "-3*q*a^2/3"}}},

      {"T4 subgroup action", "taft(4)", true, "lambda0<g^2>", {}, {{"1", "1"}, {"g^2", "1"}}},
      {"T4 actions",
       "taft(4)",
       true,
       "lambda_alpha",
       {"b"},
       {{"1", "1"},
        {"g", "0"},
        {"g^2", "0"},
        {"g^3", "0"},
        {"x", "b"},
        {"gx", "0"},
        {"g^2x", "0"},
        {"g^3x", "-w*b"},
        {"x^2", "b^2"},
        {"gx^2", "0"},
        {"g^2x^2", "-w*b^2"},
        {"g^3x^2", "(1-w)*b^2"},
        {"x^3", "b^3"},
        {"gx^3", "b^3"},
        {"g^2x^3", "b^3"},
        {"g^3x^3", "b^3"}}},
      {"T4 subgroup coaction", "taft(4)", false, "z<g^2>", {}, {{"1", "1/2"}, {"g^2", "1/2"}}},
      {"T4 coactions",
       "taft(4)",
       false,
       "z_alpha",
       {"b"},
       {{"1", "1/4"},
        {"g", "1/4"},
        {"g^2", "1/4"},
        {"g^3", "1/4"},
        {"gx", "w*(1+w)*b/4"},
        {"g^2x", "-2*b/4"},
        {"g^3x", "-(1+w)*b/4"},
        {"gx^2", "-2*w*b^2/4"},
        {"g^2x^2", "2*b^2/4"},
        {"gx^3", "2*(1+w)*b^3/4"}}},

      {"Nichols n=3 actions",
       "nichols(3)",
       true,
       "lambda_alpha",
       {"a1", "a2"},
       {{"1", "1"}, {"g", "0"}, {"x1x2", "0"}, {"gx1x2", "0"}, {"x1", "a1"}, {"gx1", "a1"}, {"x2", "a2"}, {"gx2", "a2"}}},
      {"Nichols n=4 actions",
       "nichols(4)",
       true,
       "lambda_alpha",
       {"b1", "b2", "b3"},
       {{"1", "1"}, {"x1", "b1"}, {"gx1", "b1"}, {"x2", "b2"}, {"gx2", "b2"}, {"x3", "b3"}, {"gx3", "b3"}}},
      {"Nichols n=3 coactions", "nichols(3)", false, "z_alpha", {"b1", "b2"}, {{"1", "1/2"}, {"g", "1/2"}, {"gx1", "-b1"}, {"gx2", "-b2"}}},
      {"Nichols n=4 coactions",
       "nichols(4)",
       false,
       "z_alpha",
       {"c1", "c2", "c3"},
       {{"1", "1/2"}, {"g", "1/2"}, {"gx1", "-c1"}, {"gx2", "-c2"}, {"gx3", "-c3"}}},

      // Cyclic group algebra and its dual, N = {1, g^2} in C_4.
      {"C4 subgroup action", "groupalg(4)", true, "lambda<g^2>", {}, {{"1", "1"}, {"g^2", "1"}}},
      {"C4 subgroup coaction", "groupalg(4)", false, "z<g^2>", {}, {{"1", "1/2"}, {"g^2", "1/2"}}},
      {"dual C4 subgroup action", "dualgroupalg(4)", true, "lambda*<g^2>", {}, {{"(1)*", "1/2"}, {"(g^2)*", "1/2"}}},
      {"dual C4 subgroup coaction", "dualgroupalg(4)", false, "z*<g^2>", {}, {{"(1)*", "1"}, {"(g^2)*", "1"}}},
  };
  return tables;
}

std::vector<ReferenceDiff> compare_reference_tables(const HopfPtr& H, bool actions) {
  ExpressionSymbols symbols;
  symbols.root_names = {"q", "w", "omega", "z"};

  std::vector<ReferenceDiff> out;
  for (const auto& t : reference_tables()) {
    if (t.algebra != H->name || t.action != actions) continue;
    ReferenceDiff diff;
    diff.title = t.title;

    std::vector<std::string> family_params;
    const std::vector<ParamPoly>* coords = nullptr;
    std::vector<ActionFamily> acts;
    std::vector<CoactionFamily> coacts;
    if (actions) {
      acts = known_actions(H);
      for (const auto& f : acts)
        if (f.name == t.family) {
          family_params = f.params;
          coords = &f.functional.coords;
        }
    } else {
      coacts = known_coactions(H);
      for (const auto& f : coacts)
        if (f.name == t.family) {
          family_params = f.params;
          coords = &f.element.coords;
        }
    }
    if (!coords) {
      diff.mismatches.push_back("family " + t.family + " is not produced for " + H->name);
      out.push_back(std::move(diff));
      continue;
    }
    if (family_params.size() != t.params.size()) {
      diff.mismatches.push_back("family " + t.family + " has " + std::to_string(family_params.size()) + " parameters, table has " +
                                std::to_string(t.params.size()));
      out.push_back(std::move(diff));
      continue;
    }
    std::map<std::string, std::string> rename;
    for (std::size_t k = 0; k < t.params.size(); ++k) rename[family_params[k]] = t.params[k];

    std::map<std::string, std::string> expected(t.entries.begin(), t.entries.end());
    for (const auto& [label, _] : expected)
      if (std::find(H->basis.begin(), H->basis.end(), label) == H->basis.end())
        diff.mismatches.push_back("unknown basis label " + label);

    for (std::size_t i = 0; i < H->dim; ++i) {
      auto it = expected.find(H->basis[i]);
      if (it == expected.end() && !t.complete) continue;
      ParamPoly want = it == expected.end() ? ParamPoly(H->order) : parse_expression(it->second, H->order, symbols);
      ParamPoly have = (*coords)[i].rename(rename);
      ++diff.compared;
      if (want != have)
        diff.mismatches.push_back(H->basis[i] + ": expected " + want.to_string("z") + ", library gives " + have.to_string("z"));
    }
    out.push_back(std::move(diff));
  }
  return out;
}

}  // namespace partial_hopf
