#pragma once

#include <boost/multiprecision/cpp_complex.hpp>
#include <cstdint>
#include <functional>
#include <vector>

#include "cubics/cpoly.hpp"

namespace cubics {

using QuadComplex = boost::multiprecision::cpp_complex_quad;

// A square or overdetermined polynomial system with complex coefficients.
struct PolySystem {
  int nvars = 0;
  std::vector<CPoly> equations;

  std::vector<Complex> evaluate(const std::vector<Complex>& x) const;
  // Residual of a point: max_i |f_i(x)| / coeff_scale(f_i).
  double residual(const std::vector<Complex>& x) const;
};

struct TrackerConfig {
  uint64_t seed = 0;
  double newton_tol = 1e-12;       // corrector convergence, relative step size
  double residual_tol = 1e-8;      // acceptance residual for reported solutions
  int max_corrector_iters = 4;     // per tracking step
  int max_refine_iters = 30;       // final Newton polish
  double initial_step = 0.05;
  double min_step = 1e-14;
  double max_step = 0.2;
  double divergence_bound = 1e6;   // path norm cutoff (solution at infinity)
  int max_steps = 1200;            // per-path step budget
  double dedup_distance = 1e-6;
  double singular_condition = 1e8;  // Jacobian condition flag threshold
  double near_multiple_distance = 1e-4;
  int max_path_failures = 0;       // stalled paths tolerated before erroring
  int threads = 1;                 // path-tracking worker count
};

struct Solution {
  std::vector<Complex> point;
  double residual = 0;
  double condition = 0;
  bool singular = false;
  bool near_multiple = false;
};

struct PathStats {
  int tracked = 0;
  int converged = 0;
  int diverged = 0;
  int failed = 0;
  int deduplicated = 0;
  int extended_retries = 0;
};

struct SolutionSet {
  std::vector<Solution> solutions;
  PathStats stats;
  uint64_t seed = 0;
  TrackerConfig config;
};

struct RefineResult {
  std::vector<Complex> point;
  double residual = 0;
  double condition = 0;
  bool converged = false;
  bool singular = false;
};

// Total-degree homotopy continuation: tracks prod(deg_i) paths from the start
// system x_i^{d_i} = gamma_i (random unit-modulus gamma, gamma-trick path
// constant) and returns all converged finite solutions, Newton-refined and
// deduplicated. Throws Error("path failures exceeded budget") when more than
// cfg.max_path_failures paths stall; divergent paths are counted, not errors.
SolutionSet total_degree_solve(const PolySystem& system, const TrackerConfig& cfg);

// Newton iteration at fixed precision; reports convergence and a Jacobian
// condition estimate instead of throwing on divergence.
RefineResult refine(const std::vector<Complex>& point, const PolySystem& system,
                    int iterations = 30);

// One Newton polish pass in quadruple precision; returns the improved point
// rounded back to double together with its quad-precision value.
std::vector<QuadComplex> refine_extended(const std::vector<Complex>& point,
                                         const PolySystem& system, int iterations = 4);

// Overdetermined system -> n random complex linear combinations plus a filter
// that re-tests candidates against all original equations.
struct SquaredSystem {
  PolySystem squared;
  PolySystem original;
  double filter_tol = 1e-8;

  bool filter(const std::vector<Complex>& point) const {
    return original.residual(point) < filter_tol;
  }
};

SquaredSystem square_up(const PolySystem& system, int target_equations, uint64_t seed,
                        double filter_tol = 1e-8);

}  // namespace cubics
