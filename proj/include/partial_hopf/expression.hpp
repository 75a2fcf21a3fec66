#pragma once

#include <set>
#include <string>
#include <string_view>

#include "partial_hopf/param_poly.hpp"

namespace partial_hopf {

/// Names bound to the primitive root of unity of the scalar field. Any other
/// identifier is read as a free parameter.
struct ExpressionSymbols {
  std::set<std::string, std::less<>> root_names{"z"};
};

/// Parses an exact expression such as "(1+z)/2", "(1-w)*b^2" or "-q*alpha".
/// Grammar: sums and differences of products and quotients of powers of
/// integers, identifiers and parenthesised expressions. Division is only
/// allowed by nonzero constants. Throws ParseError.
ParamPoly parse_expression(std::string_view text, int order, const ExpressionSymbols& symbols = {});

/// Parses an expression that must not contain parameters.
CycNumber parse_scalar(std::string_view text, int order, const ExpressionSymbols& symbols = {});

}  // namespace partial_hopf
