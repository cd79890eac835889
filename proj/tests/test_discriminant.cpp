#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubics/discriminant.hpp"
#include "cubics/parse.hpp"
#include "cubics/transform.hpp"

using namespace cubics;

namespace {

const char* kFermat = "x^3+y^3+z^3+w^3";
const char* kCayley = "x*y*z + x*y*w + x*z*w + y*z*w";

CubicForm random_cubic(std::mt19937_64& rng, int bound = 5) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::array<Rational, kNumCubicCoeffs> c;
  for (auto& ci : c) ci = dist(rng);
  c[0] += 1;
  return CubicForm(std::move(c));
}

QuadricQuadruple squares() {
  std::array<MultiPoly, 4> q;
  for (int i = 0; i < 4; ++i) {
    Monomial m;
    m.e[i] = 2;
    q[i] = MultiPoly::term(m, 1);
  }
  return QuadricQuadruple::from(std::move(q));
}

}  // namespace

TEST_CASE("resultant of the coordinate squares is 1") {
  CHECK(macaulay_resultant(squares()) == 1);
}

TEST_CASE("resultant vanishes on a quadruple with a common zero") {
  // (x^2, xy, xz, xw) all vanish at (0:1:0:0)
  std::array<MultiPoly, 4> q;
  Monomial xx, xy, xz, xw;
  xx.e = {2, 0, 0, 0};
  xy.e = {1, 1, 0, 0};
  xz.e = {1, 0, 1, 0};
  xw.e = {1, 0, 0, 1};
  q[0] = MultiPoly::term(xx, 1);
  q[1] = MultiPoly::term(xy, 1);
  q[2] = MultiPoly::term(xz, 1);
  q[3] = MultiPoly::term(xw, 1);
  CHECK(macaulay_resultant(QuadricQuadruple::from(std::move(q))) == 0);
}

TEST_CASE("resultant has degree 8 in each argument") {
  std::mt19937_64 rng(404);
  auto grad = gradient(random_cubic(rng));
  QuadricQuadruple q = QuadricQuadruple::from(grad);
  Rational base = macaulay_resultant(q);
  REQUIRE(base != 0);
  for (Rational lambda : {Rational(2), Rational(-3, 2)}) {
    QuadricQuadruple scaled = q;
    scaled.q[0] = scaled.q[0] * lambda;
    Rational expect = base;
    for (int k = 0; k < 8; ++k) expect *= lambda;
    CHECK(macaulay_resultant(scaled) == expect);
  }
}

TEST_CASE("discriminant: Fermat is smooth with the frozen regression value") {
  auto d = discriminant(parse_cubic(kFermat));
  CHECK_FALSE(d.is_zero);
  // 3^32: the gradient quadrics are 3 x_i^2, so both Macaulay determinants
  // are diagonal. Frozen as the normalization regression constant.
  CHECK(d.value == Rational("1853020188851841"));
}

TEST_CASE("discriminant: Cayley 4-nodal cubic is singular") {
  auto d = discriminant(parse_cubic(kCayley));
  CHECK(d.is_zero);
  CHECK(d.value == 0);
}

TEST_CASE("discriminant homogeneity: disc(2f) = 2^32 disc(f), bit-exact") {
  std::mt19937_64 rng(808);
  CubicForm f = random_cubic(rng);
  std::array<Rational, kNumCubicCoeffs> doubled;
  for (int i = 0; i < kNumCubicCoeffs; ++i) doubled[i] = f[i] * 2;
  Rational lhs = discriminant(CubicForm(doubled)).value;
  Rational rhs = discriminant(f).value * Rational(Int(1) << 32);
  CHECK(lhs == rhs);
}

TEST_CASE("fixed-transform relative invariance: the ratio is constant in f") {
  std::mt19937_64 rng(909);
  ProjTransform A = ProjTransform::random_invertible(rng, 3);
  CubicForm f1 = random_cubic(rng);
  CubicForm f2 = random_cubic(rng);
  Rational d1 = discriminant(f1).value;
  Rational d2 = discriminant(f2).value;
  REQUIRE(d1 != 0);
  REQUIRE(d2 != 0);
  Rational r1 = discriminant(act(f1, A)).value / d1;
  Rational r2 = discriminant(act(f2, A)).value / d2;
  CHECK(r1 == r2);
  CHECK(r1 != 0);
  // consistent with a power of det(A): disc(f o A) = det(A)^24 disc(f)
  Rational det = A.det();
  Rational expect = 1;
  for (int k = 0; k < 24; ++k) expect *= det;
  CHECK(r1 == expect);
}

TEST_CASE("is_singular: Fermat is not") {
  auto rep = is_singular(parse_cubic(kFermat));
  CHECK_FALSE(rep.singular);
  CHECK(rep.witnesses.empty());
}

TEST_CASE("is_singular: Cayley nodal cubic has the four coordinate points") {
  auto rep = is_singular(parse_cubic(kCayley), 5);
  CHECK(rep.singular);
  CHECK(rep.witness_isolated);
  REQUIRE(rep.witnesses.size() == 4);
  // each witness is a coordinate point: one dominant entry
  for (const auto& w : rep.witnesses) {
    int big = 0;
    for (int v = 0; v < 4; ++v) {
      double m = std::abs(w.point[v]);
      if (m > 1e-7) ++big;
    }
    CHECK(big == 1);
    CHECK(w.residual < 1e-8);
  }
}

TEST_CASE("is_singular: triple plane flagged non-isolated") {
  auto rep = is_singular(parse_cubic("x^3"), 5);
  CHECK(rep.singular);
  CHECK_FALSE(rep.witness_isolated);
  CHECK(rep.note == "singular, witness not isolated");
}

TEST_CASE("exactness: repeated runs are bit-identical") {
  std::mt19937_64 rng(117);
  CubicForm f = random_cubic(rng);
  Rational a = discriminant(f).value;
  Rational b = discriminant(f).value;
  CHECK(a == b);
  CHECK(to_string(a) == to_string(b));
}
