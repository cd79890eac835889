#include "cubics/parse.hpp"

#include <cctype>

namespace cubics {
namespace {

// Recursive-descent grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := atom ['^' nat]
//   atom   := nat ['/' nat] | var | '(' expr ')'
class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  MultiPoly parse() {
    skip_ws();
    if (eof()) throw ParseError("empty polynomial", 0);
    MultiPoly p = expr();
    skip_ws();
    if (!eof()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return p;
  }

 private:
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  MultiPoly expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++pos_;
    }
    MultiPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      MultiPoly t = term();
      acc = (c == '+') ? acc + t : acc - t;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (std::isdigit(static_cast<unsigned char>(c)) || is_var(c) || c == '(') {
        acc = acc * factor();  // juxtaposition
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      size_t at = pos_;
      long n = natural();
      if (n > 64) throw ParseError("exponent too large", at);
      MultiPoly pow{Rational(1)};
      for (long i = 0; i < n; ++i) pow = pow * base;
      return pow;
    }
    return base;
  }

  MultiPoly atom() {
    skip_ws();
    if (eof()) throw ParseError("unexpected end of input", pos_);
    char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (is_var(c)) {
      ++pos_;
      return MultiPoly::variable(var_index(c));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = integer();
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        size_t at = pos_;
        Int den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
        return MultiPoly(Rational(num, den));
      }
      return MultiPoly(Rational(num));
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  Int integer() {
    skip_ws();
    size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected number", start);
    return Int(s_.substr(start, pos_ - start));
  }

  long natural() {
    Int n = integer();
    return n.convert_to<long>();
  }

  static bool is_var(char c) { return c == 'x' || c == 'y' || c == 'z' || c == 'w'; }
  static int var_index(char c) {
    switch (c) {
      case 'x': return 0;
      case 'y': return 1;
      case 'z': return 2;
      default: return 3;
    }
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

CubicForm parse_cubic(const std::string& text) {
  return CubicForm::from_poly(parse_poly(text));
}

std::string print_cubic(const CubicForm& f) { return f.to_poly().str(); }

}  // namespace cubics
