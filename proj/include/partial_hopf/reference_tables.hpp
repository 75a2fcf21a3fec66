#pragma once

#include <string>
#include <utility>
#include <vector>

#include "partial_hopf/hopf.hpp"

namespace partial_hopf {

/// Hand-transcribed values of one family, kept as exact expression strings.
/// Root names q, w, omega and z all denote the primitive root of the algebra.
struct ReferenceTable {
  std::string title;
  std::string algebra;  // e.g. "taft(4)"
  bool action;          // functional (true) or coaction element (false)
  std::string family;   // name used by known_actions / known_coactions
  /// Parameter names used in the expressions, matched positionally to the family's.
  std::vector<std::string> params;
  /// basis label -> expected coefficient
  std::vector<std::pair<std::string, std::string>> entries;
  /// Unlisted basis elements must be zero.
  bool complete = true;
};

const std::vector<ReferenceTable>& reference_tables();

struct ReferenceDiff {
  std::string title;
  std::size_t compared = 0;
  /// One line per mismatch, empty when the table matches.
  std::vector<std::string> mismatches;
};

/// Compares every table for H of the requested kind against the library's
/// families, in the scalar ring of H.
std::vector<ReferenceDiff> compare_reference_tables(const HopfPtr& H, bool actions);

}  // namespace partial_hopf
