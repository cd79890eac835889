#pragma once

#include <array>
#include <complex>

#include "cubics/multipoly.hpp"

namespace cubics {

inline constexpr int kNumCubicCoeffs = 20;

// The canonical basis of cubic monomials in x, y, z, w. Coefficient c_i of a
// cubic form refers to position i of this table; every interface that ships a
// 20-vector uses this order.
inline constexpr std::array<std::array<int, 4>, kNumCubicCoeffs> kCubicMonomials = {{
    {3, 0, 0, 0},  // c1  x^3
    {0, 3, 0, 0},  // c2  y^3
    {0, 0, 3, 0},  // c3  z^3
    {0, 0, 0, 3},  // c4  w^3
    {2, 1, 0, 0},  // c5  x^2 y
    {2, 0, 1, 0},  // c6  x^2 z
    {2, 0, 0, 1},  // c7  x^2 w
    {1, 2, 0, 0},  // c8  x y^2
    {0, 2, 1, 0},  // c9  y^2 z
    {0, 2, 0, 1},  // c10 y^2 w
    {1, 0, 2, 0},  // c11 x z^2
    {0, 1, 2, 0},  // c12 y z^2
    {0, 0, 2, 1},  // c13 z^2 w
    {1, 0, 0, 2},  // c14 x w^2
    {0, 1, 0, 2},  // c15 y w^2
    {0, 0, 1, 2},  // c16 z w^2
    {1, 1, 1, 0},  // c17 x y z
    {1, 1, 0, 1},  // c18 x y w
    {1, 0, 1, 1},  // c19 x z w
    {0, 1, 1, 1},  // c20 y z w
}};

// Index into kCubicMonomials for a degree-3 exponent vector; -1 if not cubic.
int cubic_monomial_index(const Monomial& m);

// A cubic surface as the dense 20-vector of exact rational coefficients.
class CubicForm {
 public:
  CubicForm() = default;
  explicit CubicForm(std::array<Rational, kNumCubicCoeffs> c) : c_(std::move(c)) {}

  // Rejects non-homogeneous or non-degree-3 polynomials.
  static CubicForm from_poly(const MultiPoly& p);
  MultiPoly to_poly() const;

  const std::array<Rational, kNumCubicCoeffs>& coeffs() const { return c_; }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }

  bool is_zero() const;
  bool operator==(const CubicForm&) const = default;

  Rational evaluate(const std::array<Rational, 4>& pt) const;
  std::complex<double> evaluate(const std::array<std::complex<double>, 4>& pt) const;

  std::string str() const { return to_poly().str(); }

 private:
  std::array<Rational, kNumCubicCoeffs> c_{};
};

// The four partial derivatives, each homogeneous of degree 2.
std::array<MultiPoly, 4> gradient(const CubicForm& f);

// Determinant of the 4x4 matrix of second partials, expanded exactly.
// Homogeneous of degree 4 (or zero).
MultiPoly hessian_det(const CubicForm& f);

}  // namespace cubics
