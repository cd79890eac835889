#include "cubics/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

namespace cubics {

namespace {

double mag(const Complex& z) { return std::abs(z); }
double mag(const QuadComplex& z) { return abs(z).convert_to<double>(); }

template <class C>
C to_scalar(const Complex& z) {
  return C(z.real(), z.imag());
}
template <>
Complex to_scalar<Complex>(const Complex& z) { return z; }

template <class C>
double inf_norm(const std::vector<C>& v) {
  double m = 0;
  for (const auto& z : v) m = std::max(m, mag(z));
  return m;
}

template <class C>
double step_norm(const std::vector<C>& v) {
  double s = 0;
  for (const auto& z : v) {
    double a = mag(z);
    s += a * a;
  }
  return std::sqrt(s);
}

// In-place partial-pivot LU solve of an n x n system; false on a numerically
// singular pivot.
template <class C>
bool lu_solve(std::vector<C>& a, std::vector<C>& b, int n) {
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = mag(a[col * n + col]);
    for (int r = col + 1; r < n; ++r) {
      double v = mag(a[r * n + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < 1e-300) return false;
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
      std::swap(b[piv], b[col]);
    }
    C inv_p = C(1.0) / a[col * n + col];
    for (int r = col + 1; r < n; ++r) {
      C f = a[r * n + col] * inv_p;
      if (f == C(0.0)) continue;
      for (int c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      b[r] -= f * b[col];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    C s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r * n + c] * b[c];
    b[r] = s / (a[r * n + r]);
  }
  return true;
}

template <class C>
C eval_poly(const CPoly& p, const std::vector<C>& x) {
  C acc{};
  for (const auto& t : p.terms()) {
    C v = to_scalar<C>(t.c);
    for (int i = 0; i < p.nvars(); ++i)
      for (int k = 0; k < t.e[i]; ++k) v *= x[i];
    acc += v;
  }
  return acc;
}

struct Homotopy {
  // Projective formulation on a random affine patch: the target equations are
  // homogenized with an extra variable (index n), paths to infinity become
  // ordinary points with a vanishing homogenizing coordinate, and the patch
  // row <c, X> = 1 keeps representatives normalized.
  std::vector<CPoly> target_h;              // homogenized equations, n+1 vars
  std::vector<std::vector<CPoly>> jac_h;    // their partials
  std::vector<int> degrees;
  std::vector<Complex> start_gamma;         // G_i = x_i^{d_i} - gamma_i x_n^{d_i}
  Complex gamma;                            // path randomization constant
  std::vector<Complex> patch;               // n+1 patch coefficients
  int n = 0;                                // affine variable count

  int N() const { return n + 1; }

  template <class C>
  void eval(const std::vector<C>& x, double t, double one_minus_t, std::vector<C>& h,
            std::vector<C>& dt, std::vector<C>& J) const {
    const int NN = N();
    const C tg = to_scalar<C>(gamma) * C(one_minus_t);
    const C ct = C(t);
    for (int i = 0; i < n; ++i) {
      const int d = degrees[i];
      C f = eval_poly<C>(target_h[i], x);
      C xi_pow = x[i], xn_pow = x[n];  // x^{d-1} accumulators
      for (int k = 1; k < d - 1; ++k) {
        xi_pow *= x[i];
        xn_pow *= x[n];
      }
      if (d == 1) xi_pow = xn_pow = C(1.0);
      C g = xi_pow * x[i] - to_scalar<C>(start_gamma[i]) * xn_pow * x[n];
      h[i] = tg * g + ct * f;
      dt[i] = f - to_scalar<C>(gamma) * g;
      for (int j = 0; j < NN; ++j) {
        C df = eval_poly<C>(jac_h[i][j], x);
        C dg{};
        if (j == i) dg = C(double(d)) * xi_pow;
        if (j == n) dg -= to_scalar<C>(start_gamma[i]) * C(double(d)) * xn_pow;
        J[i * NN + j] = tg * dg + ct * df;
      }
    }
    // patch row: <c, X> - 1, independent of t
    C pr = C(-1.0);
    for (int j = 0; j < NN; ++j) {
      pr += to_scalar<C>(patch[j]) * x[j];
      J[n * NN + j] = to_scalar<C>(patch[j]);
    }
    h[n] = pr;
    dt[n] = C(0.0);
  }
};

// Ratio |X_hom| / max|X_i|: small means the projective point lies at (or
// heads for) the hyperplane at infinity.
template <class C>
double hom_ratio(const std::vector<C>& X) {
  double m = 0;
  for (const auto& z : X) m = std::max(m, mag(z));
  return m == 0 ? 0.0 : mag(X.back()) / m;
}

enum class PathEnd { Converged, Diverged, Stalled, Exhausted };

// Davidenko tangent dX/dt = -J^{-1} dH/dt at (X, t); false on singular J.
template <class C, class TReal>
bool tangent(const Homotopy& H, const std::vector<C>& x, TReal t, std::vector<C>& out,
             std::vector<C>& h, std::vector<C>& dt_vec, std::vector<C>& J, std::vector<C>& Jc) {
  const int N = H.N();
  H.eval(x, static_cast<double>(t), static_cast<double>(TReal(1.0) - t), h, dt_vec, J);
  for (int i = 0; i < N; ++i) out[i] = -dt_vec[i];
  Jc = J;
  return lu_solve(Jc, out, N);
}

struct TrackOutcome {
  PathEnd end = PathEnd::Stalled;
  double t_reached = 0;
};

// Tracks from (x, t_from) to t = 1. The path parameter is carried in TReal:
// the quad-precision resume needs sub-1e-16 steps near t = 1, where double
// increments would vanish.
template <class C, class TReal>
TrackOutcome track_path(const Homotopy& H, std::vector<C>& x, const TrackerConfig& cfg,
                        double newton_tol, TReal t_from, double min_step, int max_steps) {
  const int N = H.N();
  std::vector<C> h(N), dt_vec(N), J(N * N), rhs(N), Jc(N * N);
  std::vector<C> k1(N), k2(N), k3(N), k4(N), xs(N);
  TReal t = t_from, dt = TReal(cfg.initial_step);
  const TReal one(1.0);
  int streak = 0;
  int steps = 0;
  while (t < one) {
    if (++steps > max_steps)
      return {hom_ratio(x) < 1e-3 ? PathEnd::Diverged : PathEnd::Exhausted,
              static_cast<double>(t)};
    if (dt > one - t) dt = one - t;
    const C cdt = to_scalar<C>(Complex(static_cast<double>(dt)));
    const C half = C(0.5);
    // RK4 predictor on the Davidenko ODE
    std::vector<C> xp = x;
    bool predicted = tangent(H, x, t, k1, h, dt_vec, J, Jc);
    if (predicted) {
      for (int i = 0; i < N; ++i) xs[i] = x[i] + k1[i] * cdt * half;
      predicted = tangent(H, xs, t + dt / 2, k2, h, dt_vec, J, Jc);
    }
    if (predicted) {
      for (int i = 0; i < N; ++i) xs[i] = x[i] + k2[i] * cdt * half;
      predicted = tangent(H, xs, t + dt / 2, k3, h, dt_vec, J, Jc);
    }
    if (predicted) {
      for (int i = 0; i < N; ++i) xs[i] = x[i] + k3[i] * cdt;
      predicted = tangent(H, xs, t + dt, k4, h, dt_vec, J, Jc);
    }
    if (predicted) {
      for (int i = 0; i < N; ++i)
        xp[i] = x[i] + (k1[i] + C(2.0) * k2[i] + C(2.0) * k3[i] + k4[i]) * cdt / C(6.0);
    }
    // Newton corrector at t + dt
    TReal tn = t + dt;
    bool ok = false;
    for (int it = 0; it < cfg.max_corrector_iters; ++it) {
      H.eval(xp, static_cast<double>(tn), static_cast<double>(TReal(1.0) - tn), h, dt_vec, J);
      for (int i = 0; i < N; ++i) rhs[i] = -h[i];
      Jc = J;
      if (!lu_solve(Jc, rhs, N)) break;
      for (int i = 0; i < N; ++i) xp[i] += rhs[i];
      if (step_norm(rhs) <= newton_tol * std::max(1.0, inf_norm(xp))) {
        ok = true;
        break;
      }
    }
    if (ok) {
      x = xp;
      t = tn;
      if (++streak >= 4) {
        if (dt * 2 < TReal(cfg.max_step)) dt *= 2;
        streak = 0;
      }
      if (hom_ratio(x) < 1e-9) return {PathEnd::Diverged, static_cast<double>(t)};
    } else {
      streak = 0;
      dt /= 2;
      if (dt < TReal(min_step))
        return {hom_ratio(x) < 1e-3 ? PathEnd::Diverged : PathEnd::Stalled,
                static_cast<double>(t)};
    }
  }
  return {PathEnd::Converged, 1.0};
}

// Newton on the target system at fixed t = 1.
template <class C>
bool newton_polish(const PolySystem& sys, const std::vector<std::vector<CPoly>>& jac,
                   std::vector<C>& x, int iters, double tol) {
  const int n = sys.nvars;
  std::vector<C> r(n), J(n * n);
  bool small_step = false;
  for (int it = 0; it < iters; ++it) {
    for (int i = 0; i < n; ++i) {
      r[i] = -eval_poly<C>(sys.equations[i], x);
      for (int j = 0; j < n; ++j) J[i * n + j] = eval_poly<C>(jac[i][j], x);
    }
    std::vector<C> Jc = J;
    if (!lu_solve(Jc, r, n)) return small_step;
    for (int i = 0; i < n; ++i) x[i] += r[i];
    if (step_norm(r) <= tol * std::max(1.0, inf_norm(x))) {
      small_step = true;
      if (step_norm(r) == 0.0) break;
    }
  }
  return small_step;
}

std::vector<std::vector<CPoly>> system_jacobian(const PolySystem& sys) {
  std::vector<std::vector<CPoly>> jac(sys.equations.size());
  for (size_t i = 0; i < sys.equations.size(); ++i) {
    jac[i].reserve(sys.nvars);
    for (int j = 0; j < sys.nvars; ++j) jac[i].push_back(sys.equations[i].derivative(j));
  }
  return jac;
}

// Condition measure of the Jacobian at x: sigma_max / sigma_min, with the
// numerator floored at 1 so a uniformly tiny Jacobian (near-multiple root)
// still reads as ill-conditioned.
double jacobian_condition(const PolySystem& sys, const std::vector<std::vector<CPoly>>& jac,
                          const std::vector<Complex>& x) {
  const int n = sys.nvars;
  Eigen::MatrixXcd J(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) J(i, j) = jac[i][j].evaluate(x);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(J);
  double smin = svd.singularValues()(n - 1);
  double smax = svd.singularValues()(0);
  if (smin <= 0) return 1e300;
  return std::max(smax, 1.0) / smin;
}

bool point_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return false;
}

double point_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    double d = std::abs(a[i] - b[i]);
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

std::vector<Complex> PolySystem::evaluate(const std::vector<Complex>& x) const {
  std::vector<Complex> out(equations.size());
  for (size_t i = 0; i < equations.size(); ++i) out[i] = equations[i].evaluate(x);
  return out;
}

double PolySystem::residual(const std::vector<Complex>& x) const {
  double r = 0;
  for (const auto& eq : equations) r = std::max(r, std::abs(eq.evaluate(x)) / eq.coeff_scale());
  return r;
}

SolutionSet total_degree_solve(const PolySystem& system, const TrackerConfig& cfg) {
  const int n = system.nvars;
  if (static_cast<int>(system.equations.size()) != n)
    throw Error("total_degree_solve requires a square system");
  for (const auto& eq : system.equations)
    if (eq.degree() < 1) throw Error("total_degree_solve: equation of degree < 1");

  Homotopy H;
  H.n = n;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  auto unit = [&] {
    double a = angle(rng);
    return Complex(std::cos(a), std::sin(a));
  };
  H.gamma = unit();
  long total_paths = 1;
  for (const auto& eq : system.equations) {
    int d = eq.degree();
    H.degrees.push_back(d);
    H.start_gamma.push_back(unit());
    total_paths *= d;
  }
  // homogenize each equation with the extra variable (index n)
  for (int i = 0; i < n; ++i) {
    CPoly he(n + 1);
    for (const auto& term : system.equations[i].terms()) {
      CPoly::Exponents e = term.e;
      int deg = 0;
      for (int v = 0; v < n; ++v) deg += e[v];
      e[n] = H.degrees[i] - deg;
      he.add_term(e, term.c);
    }
    H.target_h.push_back(std::move(he));
  }
  for (int i = 0; i < n; ++i) {
    std::vector<CPoly> row;
    for (int j = 0; j <= n; ++j) row.push_back(H.target_h[i].derivative(j));
    H.jac_h.push_back(std::move(row));
  }
  for (int j = 0; j <= n; ++j) H.patch.push_back(unit());

  // Start roots: every combination of d_i-th roots of start_gamma_i at
  // homogenizing coordinate 1, rescaled onto the patch.
  std::vector<std::vector<Complex>> starts;
  starts.reserve(total_paths);
  std::vector<int> idx(n, 0);
  for (long p = 0; p < total_paths; ++p) {
    std::vector<Complex> x(n + 1);
    x[n] = Complex(1.0);
    for (int i = 0; i < n; ++i) {
      double base = std::arg(H.start_gamma[i]);
      double th = (base + 2.0 * M_PI * idx[i]) / H.degrees[i];
      x[i] = Complex(std::cos(th), std::sin(th));
    }
    Complex scale = 0;
    for (int j = 0; j <= n; ++j) scale += H.patch[j] * x[j];
    for (auto& z : x) z /= scale;
    starts.push_back(std::move(x));
    for (int i = n - 1; i >= 0; --i) {
      if (++idx[i] < H.degrees[i]) break;
      idx[i] = 0;
    }
  }

  struct PathResult {
    PathEnd end = PathEnd::Stalled;
    double t_reached = 0;
    std::vector<Complex> x;
    bool retried = false;
  };
  std::vector<PathResult> results(total_paths);

  auto run_path = [&](long p) {
    PathResult& res = results[p];
    std::vector<Complex> x = starts[p];
    TrackOutcome oc =
        track_path<Complex, double>(H, x, cfg, 1e-9, 0.0, cfg.min_step, cfg.max_steps);
    if (oc.end == PathEnd::Stalled) {
      // resume the stalled path in quadruple precision from where it stopped;
      // near t = 1 this covers the gap double arithmetic cannot resolve
      res.retried = true;
      std::vector<QuadComplex> xq(n + 1);
      for (int i = 0; i <= n; ++i) xq[i] = to_scalar<QuadComplex>(x[i]);
      using QReal = boost::multiprecision::cpp_bin_float_quad;
      TrackOutcome qoc = track_path<QuadComplex, QReal>(H, xq, cfg, 1e-24,
                                                        QReal(oc.t_reached), 1e-25, 600);
      if (qoc.end != PathEnd::Stalled || qoc.t_reached > oc.t_reached) {
        oc = qoc;
        for (int i = 0; i <= n; ++i)
          x[i] = Complex(xq[i].real().convert_to<double>(), xq[i].imag().convert_to<double>());
      }
    }
    res.end = oc.end;
    res.t_reached = oc.t_reached;
    res.x = std::move(x);
  };

  int threads = std::max(1, cfg.threads);
  if (threads == 1) {
    for (long p = 0; p < total_paths; ++p) run_path(p);
  } else {
    std::vector<std::thread> pool;
    std::atomic<long> next{0};
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&] {
        for (long p = next.fetch_add(1); p < total_paths; p = next.fetch_add(1)) run_path(p);
      });
    for (auto& th : pool) th.join();
  }

  SolutionSet out;
  out.seed = cfg.seed;
  out.config = cfg;
  out.stats.tracked = static_cast<int>(total_paths);
  auto jac_affine = system_jacobian(system);

  std::vector<Solution> accepted;
  const double infinity_ratio = 1.0 / cfg.divergence_bound;
  for (long p = 0; p < total_paths; ++p) {
    auto& res = results[p];
    if (res.retried) ++out.stats.extended_retries;
    if (res.end == PathEnd::Diverged) {
      ++out.stats.diverged;
      continue;
    }
    bool arrived = res.end == PathEnd::Converged;
    // a stall within 1e-6 of t = 1 means the tracker ran out of resolution
    // with the endpoint at hand; the residual certificate decides its fate
    bool rescue = res.end == PathEnd::Stalled && res.t_reached > 1.0 - 1e-6;
    if (!arrived && !rescue) {
      ++out.stats.failed;
      continue;
    }
    if (hom_ratio(res.x) < infinity_ratio) {
      ++out.stats.diverged;
      continue;
    }
    std::vector<Complex> affine(n);
    for (int i = 0; i < n; ++i) affine[i] = res.x[i] / res.x[n];
    newton_polish<Complex>(system, jac_affine, affine, cfg.max_refine_iters, cfg.newton_tol);
    double r = system.residual(affine);
    if (r > cfg.residual_tol) {
      if (hom_ratio(res.x) < 1e-4)
        ++out.stats.diverged;  // headed to infinity, never certified
      else
        ++out.stats.failed;
      continue;
    }
    res.x = std::move(affine);
    Solution s;
    s.point = std::move(res.x);
    s.residual = r;
    s.condition = jacobian_condition(system, jac_affine, s.point);
    s.singular = s.condition > cfg.singular_condition;
    accepted.push_back(std::move(s));
    ++out.stats.converged;
  }

  if (out.stats.failed > cfg.max_path_failures)
    throw Error("path failures exceeded budget: " + std::to_string(out.stats.failed) +
                " stalled, " + std::to_string(out.stats.diverged) + " diverged of " +
                std::to_string(out.stats.tracked));

  // canonical order, then distance-based dedup keeping the lower residual
  std::sort(accepted.begin(), accepted.end(),
            [](const Solution& a, const Solution& b) { return point_less(a.point, b.point); });
  for (const auto& s : accepted) {
    bool dup = false;
    for (auto& kept : out.solutions) {
      if (point_distance(kept.point, s.point) < cfg.dedup_distance) {
        dup = true;
        ++out.stats.deduplicated;
        if (s.residual < kept.residual) kept = s;
        break;
      }
    }
    if (!dup) out.solutions.push_back(s);
  }
  for (size_t i = 0; i < out.solutions.size(); ++i)
    for (size_t j = i + 1; j < out.solutions.size(); ++j)
      if (point_distance(out.solutions[i].point, out.solutions[j].point) <
          cfg.near_multiple_distance) {
        out.solutions[i].near_multiple = true;
        out.solutions[j].near_multiple = true;
      }
  return out;
}

RefineResult refine(const std::vector<Complex>& point, const PolySystem& system, int iterations) {
  auto jac = system_jacobian(system);
  RefineResult res;
  res.point = point;
  res.converged = newton_polish<Complex>(system, jac, res.point, iterations, 1e-13);
  res.residual = system.residual(res.point);
  if (static_cast<int>(system.equations.size()) == system.nvars) {
    res.condition = jacobian_condition(system, jac, res.point);
    res.singular = res.condition > 1e8;
  }
  return res;
}

std::vector<QuadComplex> refine_extended(const std::vector<Complex>& point,
                                         const PolySystem& system, int iterations) {
  auto jac = system_jacobian(system);
  std::vector<QuadComplex> x(point.size());
  for (size_t i = 0; i < point.size(); ++i) x[i] = to_scalar<QuadComplex>(point[i]);
  newton_polish<QuadComplex>(system, jac, x, iterations, 1e-28);
  return x;
}

SquaredSystem square_up(const PolySystem& system, int target_equations, uint64_t seed,
                        double filter_tol) {
  const int m = static_cast<int>(system.equations.size());
  if (target_equations > m) throw Error("square_up: target exceeds equation count");
  SquaredSystem out;
  out.original = system;
  out.filter_tol = filter_tol;
  out.squared.nvars = system.nvars;
  if (target_equations == m) {
    out.squared = system;  // no-op mixing; the filter still applies
    return out;
  }
  std::mt19937_64 rng(seed ^ 0x51ab5eedULL);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  for (int i = 0; i < target_equations; ++i) {
    CPoly combo(system.nvars);
    for (int j = 0; j < m; ++j) {
      double a = angle(rng);
      combo = combo + system.equations[j] * Complex(std::cos(a), std::sin(a));
    }
    out.squared.equations.push_back(combo);
  }
  return out;
}

}  // namespace cubics
