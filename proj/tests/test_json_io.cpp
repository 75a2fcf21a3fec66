#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "partial_hopf/algebras.hpp"
#include "partial_hopf/duality.hpp"
#include "partial_hopf/errors.hpp"
#include "partial_hopf/json_io.hpp"
#include "partial_hopf/reference_tables.hpp"

namespace ph = partial_hopf;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("partial_hopf_test_" + name)).string();
}

}  // namespace

TEST(Json, RoundTripIsByteIdentical) {
  for (auto H : {ph::taft(4), ph::nichols(3), ph::dual_group_algebra_cyclic(3), ph::taft_dual(3)}) {
    const std::string text = ph::hopf_to_json_string(*H);
    const ph::HopfData back = ph::hopf_from_json_string(text);
    EXPECT_EQ(ph::hopf_to_json_string(back), text) << H->name;
    EXPECT_EQ(back.mult, H->mult);
    EXPECT_EQ(back.basis, H->basis);
    EXPECT_TRUE(ph::validate_all(back).ok()) << H->name;
  }
}

TEST(Json, RequiredFields) {
  const auto j = ph::hopf_to_json(*ph::taft(2));
  for (const char* f : {"name", "dim", "order", "basis", "mult", "comult", "unit", "counit", "antipode", "grouplikes", "skew_primitives"})
    EXPECT_TRUE(j.contains(f)) << f;
}

TEST(Json, StructuralErrorsAreParseErrors) {
  auto j = ph::hopf_to_json(*ph::taft(2));
  j["mult"].push_back({0, 0, 99, "1"});
  EXPECT_THROW(ph::hopf_from_json(j), ph::ParseError);
  auto k = ph::hopf_to_json(*ph::taft(2));
  k.erase("counit");
  EXPECT_THROW(ph::hopf_from_json(k), ph::ParseError);
  EXPECT_THROW(ph::hopf_from_json_string("{not json"), ph::ParseError);
  EXPECT_THROW(ph::load_hopf_file(temp_path("does_not_exist.json")), ph::ParseError);
}

TEST(Json, ImportRejectsBrokenAxiomsAndNamesTheTriple) {
  auto j = ph::hopf_to_json(*ph::taft(3));
  for (auto& e : j["mult"])
    if (e[0] == 1 && e[1] == 3) e[3] = "5";
  const std::string path = temp_path("broken.json");
  {
    std::ofstream out(path);
    out << j.dump();
  }
  try {
    ph::import_hopf(path);
    FAIL() << "import accepted a corrupted table";
  } catch (const ph::ImportRejected& e) {
    bool named = false;
    for (const auto& f : e.report().failures) named = named || f.find("(i,j,k)") != std::string::npos;
    EXPECT_TRUE(named);
  }
  std::remove(path.c_str());
}

TEST(Json, ExportImportFile) {
  const std::string path = temp_path("nichols3.json");
  ph::export_hopf(*ph::nichols(3), path);
  const auto H = ph::import_hopf(path);
  EXPECT_EQ(H->dim, 8U);
  EXPECT_EQ(H->name, "nichols(3)");
  std::remove(path.c_str());
}

TEST(ReferenceTables, EveryTableMatches) {
  std::set<std::string> covered;
  for (auto H : {ph::taft(2), ph::taft(3), ph::taft(4), ph::nichols(2), ph::nichols(3), ph::nichols(4), ph::group_algebra_cyclic(4),
                 ph::dual_group_algebra_cyclic(4)})
    for (bool actions : {true, false})
      for (const auto& d : ph::compare_reference_tables(H, actions)) {
        covered.insert(d.title);
        EXPECT_GT(d.compared, 0U) << d.title;
        EXPECT_TRUE(d.mismatches.empty()) << d.title << ": " << d.mismatches.front();
      }
  EXPECT_EQ(covered.size(), ph::reference_tables().size());
}
