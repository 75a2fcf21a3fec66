#include "partial_hopf/expression.hpp"

#include <cctype>

#include "partial_hopf/errors.hpp"

namespace partial_hopf {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int order, const ExpressionSymbols& symbols)
      : text_(text), order_(order), symbols_(symbols) {}

  ParamPoly parse() {
    ParamPoly result = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ParamPoly sum() {
    ParamPoly acc = product();
    while (true) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  ParamPoly product() {
    ParamPoly acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        ParamPoly divisor = unary();
        auto c = divisor.constant_value();
        if (!c) fail("division by a non-constant expression");
        if (c->is_zero()) fail("division by zero");
        acc *= c->inverse();
      } else {
        return acc;
      }
    }
  }

  ParamPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  ParamPoly power() {
    ParamPoly base = atom();
    if (accept('^')) {
      skip_space();
      bool negative = accept('-');
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      long e = std::stol(std::string(text_.substr(start, pos_ - start)));
      if (negative) {
        auto c = base.constant_value();
        if (!c) fail("negative power of a non-constant expression");
        if (c->is_zero()) fail("negative power of zero");
        return ParamPoly(c->pow(-e));
      }
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  ParamPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ParamPoly inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ParamPoly(CycNumber(order_, Rational(Integer(std::string(text_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (symbols_.root_names.count(name)) return ParamPoly(zeta_pow(order_, 1));
      return ParamPoly::variable(order_, name);
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int order_;
  const ExpressionSymbols& symbols_;
};

}  // namespace

ParamPoly parse_expression(std::string_view text, int order, const ExpressionSymbols& symbols) {
  return Parser(text, order, symbols).parse();
}

CycNumber parse_scalar(std::string_view text, int order, const ExpressionSymbols& symbols) {
  ParamPoly p = parse_expression(text, order, symbols);
  auto c = p.constant_value();
  if (!c) throw ParseError("expected a constant, got '" + std::string(text) + "'");
  return *c;
}

}  // namespace partial_hopf
