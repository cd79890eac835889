#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubics/parse.hpp"
#include "oracles.hpp"

using namespace cubics;
using namespace cubics::testing;

namespace {

PolySystem univariate(const std::vector<double>& coeffs_low_to_high) {
  PolySystem sys;
  sys.nvars = 1;
  CPoly p(1);
  for (size_t k = 0; k < coeffs_low_to_high.size(); ++k)
    p.add_term({static_cast<int>(k)}, Complex(coeffs_low_to_high[k]));
  sys.equations.push_back(p);
  return sys;
}

}  // namespace

TEST_CASE("x^2 - 1 has the two unit roots") {
  TrackerConfig cfg;
  cfg.seed = 1;
  auto sols = total_degree_solve(univariate({-1, 0, 1}), cfg);
  REQUIRE(sols.solutions.size() == 2);
  CHECK(std::abs(sols.solutions[0].point[0] - Complex(-1.0)) < 1e-10);
  CHECK(std::abs(sols.solutions[1].point[0] - Complex(1.0)) < 1e-10);
  CHECK(sols.stats.tracked == 2);
}

TEST_CASE("product-of-linear-factors system recovers the full 9-point grid") {
  // {(x-1)(x-2)(x-3) = 0, (y-5)(y-x)(y+1) = 0}
  PolySystem sys;
  sys.nvars = 2;
  auto x = CPoly::variable(2, 0), y = CPoly::variable(2, 1);
  auto c = [](double v) { return CPoly::constant(2, Complex(v)); };
  sys.equations.push_back((x - c(1)) * (x - c(2)) * (x - c(3)));
  sys.equations.push_back((y - c(5)) * (y - x) * (y + c(1)));

  std::vector<std::vector<Complex>> expected;
  for (double xv : {1.0, 2.0, 3.0})
    for (double yv : {5.0, xv, -1.0}) expected.push_back({Complex(xv), Complex(yv)});

  TrackerConfig cfg;
  cfg.seed = 42;
  auto sols = total_degree_solve(sys, cfg);
  REQUIRE(sols.solutions.size() == 9);
  CHECK(match_distance(sols.solutions, expected) < 1e-8);
}

TEST_CASE("Bezout completeness on random product systems, 20 seeded trials") {
  std::mt19937_64 rng(987654321);
  std::vector<std::pair<int, std::vector<int>>> shapes = {
      {2, {2, 2}}, {2, {3, 3}}, {3, {2, 2, 2}}, {3, {3, 3, 3}}, {3, {3, 2, 2}},
  };
  for (int trial = 0; trial < 20; ++trial) {
    auto& [nvars, degrees] = shapes[trial % shapes.size()];
    auto ps = random_product_system(rng, nvars, degrees);
    TrackerConfig cfg;
    cfg.seed = 1000 + trial;
    auto sols = total_degree_solve(ps.system, cfg);
    CAPTURE(trial);
    REQUIRE(sols.solutions.size() == ps.roots.size());
    CHECK(match_distance(sols.solutions, ps.roots) < 1e-8);
  }
}

TEST_CASE("determinism: identical system, config and seed give identical output") {
  std::mt19937_64 rng(5150);
  auto ps = random_product_system(rng, 3, {3, 2, 2});
  TrackerConfig cfg;
  cfg.seed = 77;
  auto a = total_degree_solve(ps.system, cfg);
  auto b = total_degree_solve(ps.system, cfg);
  REQUIRE(a.solutions.size() == b.solutions.size());
  for (size_t i = 0; i < a.solutions.size(); ++i) {
    CHECK(a.solutions[i].point == b.solutions[i].point);
    CHECK(a.solutions[i].residual == b.solutions[i].residual);
  }
}

TEST_CASE("thread count does not change the result") {
  std::mt19937_64 rng(31337);
  auto ps = random_product_system(rng, 3, {3, 3, 3});
  TrackerConfig cfg;
  cfg.seed = 9;
  auto serial = total_degree_solve(ps.system, cfg);
  cfg.threads = 4;
  auto parallel = total_degree_solve(ps.system, cfg);
  REQUIRE(serial.solutions.size() == parallel.solutions.size());
  for (size_t i = 0; i < serial.solutions.size(); ++i)
    CHECK(serial.solutions[i].point == parallel.solutions[i].point);
}

TEST_CASE("conjugation symmetry for real-coefficient systems") {
  std::mt19937_64 rng(271828);
  auto ps = random_product_system(rng, 2, {3, 3});
  TrackerConfig cfg;
  cfg.seed = 3;
  auto sols = total_degree_solve(ps.system, cfg);
  for (const auto& s : sols.solutions) {
    std::vector<Complex> conj_pt;
    for (const auto& z : s.point) conj_pt.push_back(std::conj(z));
    double best = 1e300;
    for (const auto& other : sols.solutions) {
      double d2 = 0;
      for (size_t v = 0; v < conj_pt.size(); ++v) d2 += std::norm(conj_pt[v] - other.point[v]);
      best = std::min(best, std::sqrt(d2));
    }
    CHECK(best < cfg.dedup_distance);
  }
}

TEST_CASE("refine: an exact root stays put with zero residual") {
  auto sys = univariate({-1, 0, 1});  // x^2 - 1
  auto res = refine({Complex(1.0)}, sys);
  CHECK(res.point[0] == Complex(1.0));
  CHECK(res.residual == 0.0);
  CHECK(res.converged);
  CHECK_FALSE(res.singular);
}

TEST_CASE("refine: perturbed sqrt(2) converges to 12 digits") {
  auto sys = univariate({-2, 0, 1});  // x^2 - 2
  auto res = refine({Complex(1.41)}, sys);
  CHECK(res.converged);
  CHECK(std::abs(res.point[0].real() - std::sqrt(2.0)) < 1e-12);
  CHECK(res.residual < 1e-12);
}

TEST_CASE("refine: near-double root raises the singular flag") {
  // (x-1)(x-1-1e-9): a root pair at distance 1e-9, Jacobian ~1e-9 there.
  auto sys = univariate({1.0 + 1e-9, -(2.0 + 1e-9), 1});
  auto res = refine({Complex(1.0001)}, sys);
  CHECK(res.singular);
}

TEST_CASE("square_up: m == n is a no-op but the filter still applies") {
  std::mt19937_64 rng(99);
  auto ps = random_product_system(rng, 2, {2, 2});
  auto sq = square_up(ps.system, 2, 123);
  CHECK(sq.squared.equations.size() == 2);
  for (size_t i = 0; i < 2; ++i)
    CHECK(sq.squared.equations[i].terms().size() == ps.system.equations[i].terms().size());
  CHECK(sq.filter({ps.roots[0][0], ps.roots[0][1]}));
  CHECK_FALSE(sq.filter({Complex(17.5, 2.25), Complex(-3.75, 0.5)}));
}

TEST_CASE("square_up: combos keep the common zeros and the filter rejects the rest") {
  // {x^2-1, (x-1)(y-2), (y-2)(y+3)}: common zeros (1,2), (1,-3), (-1,2).
  PolySystem sys;
  sys.nvars = 2;
  auto x = CPoly::variable(2, 0), y = CPoly::variable(2, 1);
  auto c = [](double v) { return CPoly::constant(2, Complex(v)); };
  sys.equations.push_back((x - c(1)) * (x + c(1)));
  sys.equations.push_back((x - c(1)) * (y - c(2)));
  sys.equations.push_back((y - c(2)) * (y + c(3)));
  auto sq = square_up(sys, 2, 7);
  CHECK(sq.squared.equations.size() == 2);
  TrackerConfig cfg;
  cfg.seed = 11;
  auto sols = total_degree_solve(sq.squared, cfg);
  std::vector<std::vector<Complex>> kept;
  for (const auto& s : sols.solutions)
    if (sq.filter(s.point)) kept.push_back(s.point);
  std::vector<std::vector<Complex>> expected = {
      {Complex(1.0), Complex(2.0)}, {Complex(1.0), Complex(-3.0)}, {Complex(-1.0), Complex(2.0)}};
  REQUIRE(kept.size() == 3);
  for (const auto& p : kept) {
    double best = 1e300;
    for (const auto& e : expected)
      best = std::min(best, std::abs(p[0] - e[0]) + std::abs(p[1] - e[1]));
    CHECK(best < 1e-8);
  }
}

TEST_CASE("every reported solution satisfies the original system to tolerance") {
  std::mt19937_64 rng(1234);
  auto ps = random_product_system(rng, 3, {2, 3, 2});
  TrackerConfig cfg;
  cfg.seed = 8;
  auto sols = total_degree_solve(ps.system, cfg);
  for (const auto& s : sols.solutions) CHECK(ps.system.residual(s.point) < cfg.residual_tol);
}
