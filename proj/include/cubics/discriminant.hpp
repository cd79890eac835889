#pragma once

#include <array>
#include <complex>
#include <vector>

#include "cubics/cubic_form.hpp"

namespace cubics {

// Four homogeneous degree-2 forms in x, y, z, w.
struct QuadricQuadruple {
  std::array<MultiPoly, 4> q;

  // Throws unless every entry is homogeneous of degree 2 (or zero).
  static QuadricQuadruple from(std::array<MultiPoly, 4> quadrics);
};

// Exact resultant of four quadric surfaces, computed as the quotient of the
// degree-5 Macaulay determinant (56 x 56) by its non-reduced minor (24 x 24).
// Zero iff the quadrics share a common projective zero. Degenerate minors are
// handled by seeded unimodular coordinate changes and, as a last resort, by
// exact interpolation along a pencil with a reference quadruple.
Rational macaulay_resultant(const QuadricQuadruple& Q);

struct DiscriminantValue {
  Rational value;
  bool is_zero = false;
};

// The degree-32 discriminant of a cubic surface: the resultant of the four
// partial-derivative quadrics. Exact; zero iff the surface is singular.
DiscriminantValue discriminant(const CubicForm& f);

struct SingularPoint {
  std::array<std::complex<double>, 4> point;  // projective representative
  double residual = 0;
  bool isolated = true;
};

struct SingularityReport {
  bool singular = false;
  std::vector<SingularPoint> witnesses;
  bool witness_isolated = true;  // false: singular locus not zero-dimensional
  std::string note;
};

// Exact zero-test of the discriminant plus, for singular surfaces, a numeric
// witness search over the gradient system.
SingularityReport is_singular(const CubicForm& f, uint64_t seed = 0);

}  // namespace cubics
