#pragma once

#include <map>
#include <optional>
#include <string>

#include "cubics/monomial.hpp"
#include "cubics/rational.hpp"

namespace cubics {

// Sparse multivariate polynomial in x, y, z, w over the rationals. Zero
// coefficients are never stored. All arithmetic is exact.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexDesc>;

  MultiPoly() = default;
  explicit MultiPoly(const Rational& c);
  static MultiPoly variable(int var);
  static MultiPoly term(const Monomial& m, const Rational& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial

  // Homogeneous-degree tag: set when every stored monomial has the same
  // total degree.
  std::optional<int> homogeneous_degree() const;

  Rational coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  MultiPoly derivative(int var) const;

  // Evaluation in the arithmetic of the point type. Scalar must support
  // construction from double (for the rational coefficients, use the exact
  // overload below when the point is rational).
  template <class Scalar>
  Scalar evaluate(const std::array<Scalar, kNumVars>& pt) const {
    Scalar acc{};
    for (const auto& [m, c] : terms_) {
      Scalar t{to_double(c)};
      for (int v = 0; v < kNumVars; ++v)
        for (int k = 0; k < m.e[v]; ++k) t *= pt[v];
      acc += t;
    }
    return acc;
  }
  Rational evaluate(const std::array<Rational, kNumVars>& pt) const;

  // Deterministic textual form in graded-lex order, e.g. "3*x^2*y - 1/2*w^3".
  std::string str() const;

 private:
  TermMap terms_;
};

MultiPoly operator*(const Rational& c, const MultiPoly& p);

}  // namespace cubics
