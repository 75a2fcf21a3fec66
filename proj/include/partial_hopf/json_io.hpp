#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "partial_hopf/errors.hpp"
#include "partial_hopf/hopf.hpp"

namespace partial_hopf {

/// Raised by import_hopf when a well-formed file describes something that is
/// not a Hopf algebra; carries the failing report.
class ImportRejected : public Error {
 public:
  explicit ImportRejected(Report report)
      : Error("imported algebra fails validation: " + std::to_string(report.failed) + " failing checks"),
        report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// Fields: name, dim, order, basis, mult [[i,j,k,c]], comult [[i,j,k,c]],
/// unit [[k,c]], counit [c per basis element], antipode [[i,k,c]],
/// grouplikes, skew_primitives {x,g,h}, degrees. Coefficients are exact
/// strings in z. A metadata vector that is a single basis element with
/// coefficient 1 is written as its index, otherwise as [[k,c]].
nlohmann::json hopf_to_json(const HopfData& H);

/// Structural decoding only: shapes, index ranges, coefficient syntax,
/// duplicate entries. Throws ParseError. Does not check the axioms.
HopfData hopf_from_json(const nlohmann::json& j);

std::string hopf_to_json_string(const HopfData& H, int indent = 2);
HopfData hopf_from_json_string(std::string_view text);

void export_hopf(const HopfData& H, const std::string& path);
/// Reads and decodes a file without checking axioms. IO failures raise ParseError.
HopfData load_hopf_file(const std::string& path);
/// load_hopf_file followed by validate_all; throws ImportRejected on failure.
HopfPtr import_hopf(const std::string& path);

}  // namespace partial_hopf
