#include "partial_hopf/rational.hpp"

#include "partial_hopf/errors.hpp"

namespace partial_hopf {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  auto slash = s.find('/');
  auto check_digits = [&](std::string_view part, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) start = 1;
    if (start >= part.size()) throw ParseError("malformed rational literal '" + s + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw ParseError("malformed rational literal '" + s + "'");
    }
  };
  if (slash == std::string::npos) {
    check_digits(s, true);
    return Rational(Integer(s[0] == '+' ? s.substr(1) : s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  check_digits(num, true);
  check_digits(den, false);
  return make_rational(Integer(num[0] == '+' ? num.substr(1) : num), Integer(den));
}

}  // namespace partial_hopf
