#pragma once

#include <string>

#include "cubics/cubic_form.hpp"

namespace cubics {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

// Polynomial expressions in x, y, z, w with integer or rational coefficients,
// operators + - * ^ and parentheses; '*' may be omitted (juxtaposition).
// Examples: "x^3+y^3+z^3+w^3", "1/2 x y z - (x+y)^3".
MultiPoly parse_poly(const std::string& text);

// parse_poly plus the degree check; throws Error("not homogeneous of degree 3")
// otherwise.
CubicForm parse_cubic(const std::string& text);

// print/parse round-trip companion of parse_cubic.
std::string print_cubic(const CubicForm& f);

}  // namespace cubics
