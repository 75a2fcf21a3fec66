#include "partial_hopf/json_io.hpp"

#include <fstream>
#include <set>
#include <utility>
#include <sstream>

#include "partial_hopf/expression.hpp"

namespace partial_hopf {

using nlohmann::json;

namespace {

json sparse_to_json(const SparseVec& v) {
  if (v.size() == 1 && v[0].second.is_one()) return v[0].first;
  json out = json::array();
  for (const auto& [k, c] : v) out.push_back({k, c.to_string("z")});
  return out;
}

/// Reads JSON values while keeping track of where we are for error messages.
struct Decoder {
  std::size_t dim = 0;
  int order = 1;

  [[noreturn]] static void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
  }

  const json& field(const json& j, const char* name) const {
    if (!j.is_object()) fail("document", "expected a JSON object");
    auto it = j.find(name);
    if (it == j.end()) fail(name, "missing field");
    return *it;
  }

  std::size_t index(const json& v, const std::string& where) const {
    if (!v.is_number_integer()) fail(where, "expected an integer index");
    auto i = v.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= dim) fail(where, "index " + std::to_string(i) + " out of range");
    return static_cast<std::size_t>(i);
  }

  CycNumber scalar(const json& v, const std::string& where) const {
    std::string text;
    if (v.is_string())
      text = v.get<std::string>();
    else if (v.is_number_integer())
      text = std::to_string(v.get<long long>());
    else
      fail(where, "expected a coefficient string");
    try {
      return parse_scalar(text, order);
    } catch (const Error& e) {
      fail(where, "bad coefficient \"" + text + "\": " + e.what());
    }
  }

  SparseVec sparse(const json& v, const std::string& where) const {
    if (v.is_number_integer()) {
      SparseVec out;
      out.emplace_back(index(v, where), CycNumber(order, 1L));
      return out;
    }
    if (!v.is_array()) fail(where, "expected an index or a list of [index, coefficient]");
    std::vector<CycNumber> dense(dim, CycNumber(order));
    std::set<std::size_t> seen;
    for (std::size_t t = 0; t < v.size(); ++t) {
      const std::string w = where + "[" + std::to_string(t) + "]";
      const json& e = v[t];
      if (!e.is_array() || e.size() != 2) fail(w, "expected [index, coefficient]");
      std::size_t k = index(e[0], w);
      if (!seen.insert(k).second) fail(w, "duplicate index " + std::to_string(k));
      dense[k] = scalar(e[1], w);
    }
    return sparsify(dense);
  }
};

}  // namespace

json hopf_to_json(const HopfData& H) {
  json j;
  j["name"] = H.name;
  j["dim"] = H.dim;
  j["order"] = H.order;
  j["basis"] = H.basis;
  json mult = json::array();
  for (std::size_t a = 0; a < H.dim; ++a)
    for (std::size_t b = 0; b < H.dim; ++b)
      for (const auto& [k, c] : H.mult[a * H.dim + b]) mult.push_back({a, b, k, c.to_string("z")});
  j["mult"] = std::move(mult);
  json comult = json::array();
  for (std::size_t a = 0; a < H.dim; ++a)
    for (const auto& t : H.comult[a]) comult.push_back({a, t.left, t.right, t.coeff.to_string("z")});
  j["comult"] = std::move(comult);
  json unit = json::array();
  for (const auto& [k, c] : H.unit) unit.push_back({k, c.to_string("z")});
  j["unit"] = std::move(unit);
  json counit = json::array();
  for (const auto& c : H.counit) counit.push_back(c.to_string("z"));
  j["counit"] = std::move(counit);
  json antipode = json::array();
  for (std::size_t a = 0; a < H.dim; ++a)
    for (const auto& [k, c] : H.antipode[a]) antipode.push_back({a, k, c.to_string("z")});
  j["antipode"] = std::move(antipode);
  json gl = json::array();
  for (const auto& g : H.grouplikes) gl.push_back(sparse_to_json(g));
  j["grouplikes"] = std::move(gl);
  json sp = json::array();
  for (const auto& s : H.skew_primitives)
    sp.push_back({{"x", sparse_to_json(s.x)}, {"g", sparse_to_json(s.g)}, {"h", sparse_to_json(s.h)}});
  j["skew_primitives"] = std::move(sp);
  if (!H.degrees.empty()) j["degrees"] = H.degrees;
  return j;
}

HopfData hopf_from_json(const json& j) {
  Decoder d;
  HopfData H;
  const json& dim = d.field(j, "dim");
  const json& order = d.field(j, "order");
  if (!dim.is_number_integer() || dim.get<long long>() < 1) Decoder::fail("dim", "expected a positive integer");
  if (!order.is_number_integer() || order.get<long long>() < 1 || order.get<long long>() > 1000)
    Decoder::fail("order", "expected an integer in [1, 1000]");
  d.dim = dim.get<std::size_t>();
  d.order = order.get<int>();
  if (d.dim > 4096) Decoder::fail("dim", "dimension " + std::to_string(d.dim) + " is too large");
  H.dim = d.dim;
  H.order = d.order;
  H.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "imported";

  const json& basis = d.field(j, "basis");
  if (!basis.is_array() || basis.size() != d.dim) Decoder::fail("basis", "expected " + std::to_string(d.dim) + " labels");
  std::set<std::string> labels;
  for (const auto& b : basis) {
    if (!b.is_string()) Decoder::fail("basis", "labels must be strings");
    if (!labels.insert(b.get<std::string>()).second) Decoder::fail("basis", "duplicate label " + b.get<std::string>());
    H.basis.push_back(b.get<std::string>());
  }

  auto quads = [&](const char* name, auto&& store) {
    const json& list = d.field(j, name);
    if (!list.is_array()) Decoder::fail(name, "expected a list of [i, j, k, coefficient]");
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (std::size_t t = 0; t < list.size(); ++t) {
      const std::string w = std::string(name) + "[" + std::to_string(t) + "]";
      const json& e = list[t];
      if (!e.is_array() || e.size() != 4) Decoder::fail(w, "expected [i, j, k, coefficient]");
      std::size_t a = d.index(e[0], w), b = d.index(e[1], w), c = d.index(e[2], w);
      if (!seen.emplace(a, b, c).second) Decoder::fail(w, "duplicate entry");
      CycNumber x = d.scalar(e[3], w);
      if (!x.is_zero()) store(a, b, c, std::move(x));
    }
  };

  H.mult.assign(d.dim * d.dim, {});
  quads("mult", [&](std::size_t a, std::size_t b, std::size_t k, CycNumber x) { H.mult[a * d.dim + b].emplace_back(k, std::move(x)); });
  for (auto& v : H.mult) std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  H.comult.assign(d.dim, {});
  quads("comult", [&](std::size_t a, std::size_t l, std::size_t r, CycNumber x) { H.comult[a].push_back(TensorTerm{l, r, std::move(x)}); });

  H.unit = d.sparse(d.field(j, "unit"), "unit");

  const json& counit = d.field(j, "counit");
  if (!counit.is_array() || counit.size() != d.dim) Decoder::fail("counit", "expected " + std::to_string(d.dim) + " coefficients");
  for (std::size_t i = 0; i < d.dim; ++i) H.counit.push_back(d.scalar(counit[i], "counit[" + std::to_string(i) + "]"));

  const json& antipode = d.field(j, "antipode");
  if (!antipode.is_array()) Decoder::fail("antipode", "expected a list of [i, k, coefficient]");
  {
    std::vector<std::vector<CycNumber>> dense(d.dim, std::vector<CycNumber>(d.dim, CycNumber(d.order)));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t t = 0; t < antipode.size(); ++t) {
      const std::string w = "antipode[" + std::to_string(t) + "]";
      const json& e = antipode[t];
      if (!e.is_array() || e.size() != 3) Decoder::fail(w, "expected [i, k, coefficient]");
      std::size_t a = d.index(e[0], w), k = d.index(e[1], w);
      if (!seen.emplace(a, k).second) Decoder::fail(w, "duplicate entry");
      dense[a][k] = d.scalar(e[2], w);
    }
    for (auto& row : dense) H.antipode.push_back(sparsify(row));
  }

  if (j.contains("grouplikes")) {
    const json& gl = j["grouplikes"];
    if (!gl.is_array()) Decoder::fail("grouplikes", "expected a list");
    for (std::size_t t = 0; t < gl.size(); ++t) H.grouplikes.push_back(d.sparse(gl[t], "grouplikes[" + std::to_string(t) + "]"));
  }
  if (j.contains("skew_primitives")) {
    const json& sp = j["skew_primitives"];
    if (!sp.is_array()) Decoder::fail("skew_primitives", "expected a list");
    for (std::size_t t = 0; t < sp.size(); ++t) {
      const std::string w = "skew_primitives[" + std::to_string(t) + "]";
      const json& e = sp[t];
      H.skew_primitives.push_back(SkewPrimitive{d.sparse(d.field(e, "x"), w + ".x"), d.sparse(d.field(e, "g"), w + ".g"),
                                                d.sparse(d.field(e, "h"), w + ".h")});
    }
  }
  if (j.contains("degrees")) {
    const json& deg = j["degrees"];
    if (!deg.is_array() || deg.size() != d.dim) Decoder::fail("degrees", "expected one integer per basis element");
    for (const auto& x : deg) {
      if (!x.is_number_integer()) Decoder::fail("degrees", "expected integers");
      H.degrees.push_back(x.get<int>());
    }
  }
  return H;
}

std::string hopf_to_json_string(const HopfData& H, int indent) {
  json j = hopf_to_json(H);
  if (indent < 0) return j.dump();
  // One field per line, one list entry per line: diffable and still compact.
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::string out = "{\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out += (std::exchange(first, false) ? "" : ",\n") + pad + json(it.key()).dump() + ": ";
    if (it->is_array() && !it->empty() && it->front().is_structured()) {
      out += "[\n";
      for (std::size_t k = 0; k < it->size(); ++k) out += pad + pad + (*it)[k].dump() + (k + 1 < it->size() ? ",\n" : "\n");
      out += pad + "]";
    } else {
      out += it->dump();
    }
  }
  return out + "\n}";
}

HopfData hopf_from_json_string(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return hopf_from_json(j);
}

void export_hopf(const HopfData& H, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << hopf_to_json_string(H) << "\n";
  if (!out) throw ParseError("failed writing " + path);
}

HopfData load_hopf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return hopf_from_json_string(buf.str());
}

HopfPtr import_hopf(const std::string& path) {
  HopfData H = load_hopf_file(path);
  Report r = validate_all(H);
  if (!r.ok()) throw ImportRejected(std::move(r));
  return std::make_shared<const HopfData>(std::move(H));
}

}  // namespace partial_hopf
