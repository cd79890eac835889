#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubics/cubic_form.hpp"
#include "cubics/parse.hpp"
#include "cubics/transform.hpp"

using namespace cubics;

namespace {

CubicForm random_cubic(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::array<Rational, kNumCubicCoeffs> c;
  bool nonzero = false;
  for (auto& ci : c) {
    ci = dist(rng);
    if (ci != 0) nonzero = true;
  }
  if (!nonzero) c[0] = 1;
  return CubicForm(std::move(c));
}

const char* kFermat = "x^3+y^3+z^3+w^3";

}  // namespace

TEST_CASE("parse: Fermat cubic hits the four cube slots") {
  CubicForm f = parse_cubic(kFermat);
  for (int i = 0; i < 4; ++i) CHECK(f[i] == 1);
  for (int i = 4; i < kNumCubicCoeffs; ++i) CHECK(f[i] == 0);
}

TEST_CASE("parse: product monomials map to c17..c20") {
  CubicForm f = parse_cubic("x*y*z + x*y*w + x*z*w + y*z*w");
  for (int i = 0; i < 16; ++i) CHECK(f[i] == 0);
  for (int i = 16; i < 20; ++i) CHECK(f[i] == 1);
}

TEST_CASE("parse: degree mismatch is rejected") {
  CHECK_THROWS_WITH_AS(parse_cubic("x^2+y^3"), doctest::Contains("not homogeneous of degree 3"),
                       Error);
  CHECK_THROWS_AS(parse_cubic("x^3+y^3+1"), Error);
  CHECK_THROWS_AS(parse_cubic("0"), Error);
}

TEST_CASE("parse: errors carry a position") {
  try {
    parse_poly("x^3 + $");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(parse_poly("(x+y"), ParseError);
  CHECK_THROWS_AS(parse_poly("3/0*x^3"), ParseError);
}

TEST_CASE("parse: rational coefficients, juxtaposition, parentheses") {
  CubicForm f = parse_cubic("1/2 x^3 - 3 y^2 w + (x+y)^3 - x^3 - y^3");
  CHECK(f[0] == Rational(1, 2));
  CHECK(f[9] == -3);
  CHECK(f[4] == 3);  // x^2 y from the expanded cube
  CHECK(f[7] == 3);  // x y^2
}

TEST_CASE("parser/printer round-trip over random coefficient vectors") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 12);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<Rational, kNumCubicCoeffs> c;
    bool nonzero = false;
    for (auto& ci : c) {
      ci = Rational(num(rng), den(rng));
      if (ci != 0) nonzero = true;
    }
    if (!nonzero) c[5] = 1;
    CubicForm f{std::move(c)};
    CHECK(parse_cubic(print_cubic(f)) == f);
  }
}

TEST_CASE("gradient: Fermat power rule") {
  auto g = gradient(parse_cubic(kFermat));
  for (int v = 0; v < 4; ++v) {
    Monomial sq;
    sq.e[v] = 2;
    CHECK(g[v] == MultiPoly::term(sq, 3));
  }
}

TEST_CASE("gradient: product rule on the coordinate-product cubic") {
  auto g = gradient(parse_cubic("x*y*z + x*y*w + x*z*w + y*z*w"));
  CHECK(g[0] == parse_poly("y*z + y*w + z*w"));
}

TEST_CASE("gradient: Euler identity holds exactly on random cubics") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    CubicForm f = random_cubic(rng);
    auto g = gradient(f);
    MultiPoly sum;
    for (int v = 0; v < 4; ++v) sum = sum + MultiPoly::variable(v) * g[v];
    CHECK(sum == f.to_poly() * Rational(3));
  }
}

TEST_CASE("hessian_det: Fermat gives 1296 xyzw") {
  MultiPoly h = hessian_det(parse_cubic(kFermat));
  CHECK(h == parse_poly("1296 x y z w"));
}

TEST_CASE("hessian_det: cube of a linear form vanishes") {
  MultiPoly h = hessian_det(parse_cubic("(x + 2y - z + 3w)^3"));
  CHECK(h.is_zero());
}

TEST_CASE("hessian_det: chain rule under a coordinate change") {
  std::mt19937_64 rng(11);
  CubicForm f = random_cubic(rng, 4);
  ProjTransform A = ProjTransform::random_invertible(rng, 3);
  MultiPoly lhs = hessian_det(act(f, A));
  MultiPoly rhs = act(hessian_det(f), A) * (A.det() * A.det());
  CHECK(lhs == rhs);
}

TEST_CASE("act: identity and coordinate swap") {
  std::mt19937_64 rng(13);
  CubicForm f = random_cubic(rng);
  CHECK(act(f, ProjTransform::identity()) == f);

  ProjTransform::Matrix swap_xy{};
  swap_xy[0][1] = 1;
  swap_xy[1][0] = 1;
  swap_xy[2][2] = 1;
  swap_xy[3][3] = 1;
  CubicForm fermat = parse_cubic(kFermat);
  CHECK(act(fermat, ProjTransform(swap_xy)) == fermat);
}

TEST_CASE("act: inverse undoes the action, composition is a right action") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    CubicForm f = random_cubic(rng, 5);
    ProjTransform A = ProjTransform::random_invertible(rng, 3);
    ProjTransform B = ProjTransform::random_invertible(rng, 3);
    CHECK(act(act(f, A), A.inverse()) == f);
    CHECK(act(f, A * B) == act(act(f, A), B));
  }
}

TEST_CASE("act: rejects singular matrices") {
  ProjTransform::Matrix zero{};
  CHECK_THROWS_AS(act(parse_cubic(kFermat), ProjTransform(zero)), Error);
}

TEST_CASE("gradient commutes with the action") {
  // grad(f o A) = A^T (grad f) o A, checked by exact expansion.
  std::mt19937_64 rng(19);
  CubicForm f = random_cubic(rng, 4);
  ProjTransform A = ProjTransform::random_invertible(rng, 3);
  auto lhs = gradient(act(f, A));
  auto gf = gradient(f);
  for (int i = 0; i < 4; ++i) {
    MultiPoly rhs;
    for (int j = 0; j < 4; ++j) rhs = rhs + act(gf[j], A) * A.at(j, i);
    CHECK(lhs[i] == rhs);
  }
}

TEST_CASE("evaluate: exact values and exact/float agreement") {
  CubicForm fermat = parse_cubic(kFermat);
  CHECK(fermat.evaluate({Rational(1), Rational(-1), Rational(0), Rational(0)}) == 0);
  CHECK(fermat.evaluate({Rational(1), Rational(1), Rational(1), Rational(1)}) == 4);

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> num(-10, 10);
  std::uniform_int_distribution<int> den(1, 8);
  for (int trial = 0; trial < 20; ++trial) {
    CubicForm f = random_cubic(rng);
    std::array<Rational, 4> pt;
    std::array<std::complex<double>, 4> fpt;
    for (int i = 0; i < 4; ++i) {
      pt[i] = Rational(num(rng), den(rng));
      fpt[i] = to_double(pt[i]);
    }
    double exact = to_double(f.evaluate(pt));
    double fl = f.evaluate(fpt).real();
    CHECK(std::abs(exact - fl) < 1e-12 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("cubic form round-trips through MultiPoly") {
  std::mt19937_64 rng(29);
  CubicForm f = random_cubic(rng);
  CHECK(CubicForm::from_poly(f.to_poly()) == f);
}
