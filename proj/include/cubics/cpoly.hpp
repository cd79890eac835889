#pragma once

#include <array>
#include <complex>
#include <map>
#include <vector>

#include "cubics/multipoly.hpp"

namespace cubics {

using Complex = std::complex<double>;

inline constexpr int kMaxPolyVars = 6;

// Sparse polynomial with complex coefficients in up to kMaxPolyVars
// variables; the floating-point counterpart of MultiPoly used by the numeric
// solver (the two extra slots serve homogenization and patch variables).
class CPoly {
 public:
  using Exponents = std::array<int, kMaxPolyVars>;
  struct Term {
    Exponents e{};
    Complex c{};
  };

  CPoly() = default;
  explicit CPoly(int nvars) : nvars_(nvars) {}

  static CPoly constant(int nvars, Complex c);
  static CPoly variable(int nvars, int var);
  static CPoly from_multipoly(const MultiPoly& p, int nvars = 4);

  int nvars() const { return nvars_; }
  int degree() const;
  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(const Exponents& e, Complex c);

  CPoly operator+(const CPoly& o) const;
  CPoly operator-(const CPoly& o) const;
  CPoly operator*(const CPoly& o) const;
  CPoly operator*(Complex s) const;

  CPoly derivative(int var) const;

  // Largest coefficient modulus; the residual normalization scale.
  double coeff_scale() const;

  template <class Scalar>
  Scalar evaluate(const std::vector<Scalar>& x) const {
    Scalar acc{};
    for (const auto& t : terms_) {
      Scalar v{t.c.real()};
      v += Scalar(0, 1) * Scalar(t.c.imag());
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < t.e[i]; ++k) v *= x[i];
      acc += v;
    }
    return acc;
  }
  Complex evaluate(const std::vector<Complex>& x) const;

 private:
  int nvars_ = 4;
  std::vector<Term> terms_;  // kept sorted by exponent for canonical layout
};

}  // namespace cubics
