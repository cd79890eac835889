#pragma once

#include <array>
#include <random>

#include "cubics/cubic_form.hpp"

namespace cubics {

// An element of PGL(4) with exact rational entries. Acts on points by
// matrix-vector product; acts on forms by substitution (see act below).
class ProjTransform {
 public:
  using Matrix = std::array<std::array<Rational, 4>, 4>;

  ProjTransform() { for (int i = 0; i < 4; ++i) m_[i][i] = 1; }
  explicit ProjTransform(Matrix m) : m_(std::move(m)) {}

  static ProjTransform identity() { return ProjTransform(); }
  // Entries uniform in [-bound, bound], resampled until the determinant is
  // nonzero.
  static ProjTransform random_invertible(std::mt19937_64& rng, int bound = 5);
  // Entries num/den with num in [-num_bound, num_bound], den in [1, den_bound].
  // The dense value set makes accidental exact alignments with a surface's
  // lines (visibility degeneracies) vanishingly unlikely.
  static ProjTransform random_rational(std::mt19937_64& rng, int num_bound = 9,
                                       int den_bound = 7);
  // Product of random integer elementary row operations; determinant +-1.
  static ProjTransform random_unimodular(std::mt19937_64& rng, int steps = 12);

  const Matrix& m() const { return m_; }
  Rational& at(int i, int j) { return m_[i][j]; }
  const Rational& at(int i, int j) const { return m_[i][j]; }

  Rational det() const;
  ProjTransform inverse() const;  // throws Error on a singular matrix
  ProjTransform operator*(const ProjTransform& o) const;

  std::array<Rational, 4> apply(const std::array<Rational, 4>& v) const;
  std::array<std::complex<double>, 4> apply(const std::array<std::complex<double>, 4>& v) const;

 private:
  Matrix m_{};
};

// Coefficient vector of f(A x); exact. Throws Error for singular A.
CubicForm act(const CubicForm& f, const ProjTransform& A);

// Substitution p(A x) for an arbitrary polynomial; exact.
MultiPoly act(const MultiPoly& p, const ProjTransform& A);

}  // namespace cubics
