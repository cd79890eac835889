#include "cubics/discriminant.hpp"

#include <map>
#include <random>

#include "cubics/solver.hpp"
#include "cubics/transform.hpp"

namespace cubics {

namespace {

// Degree-5 monomials in 4 variables, fixed graded-lex order: columns and row
// labels of the Macaulay matrix.
std::vector<Monomial> degree5_monomials() {
  std::vector<Monomial> out;
  for (int a = 5; a >= 0; --a)
    for (int b = 5 - a; b >= 0; --b)
      for (int c = 5 - a - b; c >= 0; --c) {
        Monomial m;
        m.e = {a, b, c, 5 - a - b - c};
        out.push_back(m);
      }
  return out;
}

// Smallest i with exponent >= 2; every degree-5 monomial in 4 variables has
// one. A monomial is reduced when that i is unique.
int monomial_class(const Monomial& m) {
  for (int i = 0; i < 4; ++i)
    if (m.e[i] >= 2) return i;
  return -1;
}

bool is_reduced(const Monomial& m) {
  int count = 0;
  for (int i = 0; i < 4; ++i)
    if (m.e[i] >= 2) ++count;
  return count == 1;
}

// Fraction-free Bareiss determinant of an integer matrix.
Int bareiss_det(std::vector<std::vector<Int>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (a[r][k] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// Exact determinant of a rational matrix: clear denominators per row, then
// Bareiss on integers.
Rational rational_det(const std::vector<std::vector<Rational>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  Rational scale = 1;
  for (int i = 0; i < n; ++i) {
    Int l = 1;
    for (int j = 0; j < n; ++j) l = lcm(l, denominator(m[i][j]));
    for (int j = 0; j < n; ++j) {
      Rational v = m[i][j] * l;
      a[i][j] = numerator(v);
    }
    scale /= Rational(l);
  }
  return scale * Rational(bareiss_det(std::move(a)));
}

struct MacaulayMatrices {
  std::vector<std::vector<Rational>> numerator;  // 56 x 56
  std::vector<std::vector<Rational>> minor;      // 24 x 24 non-reduced block
};

MacaulayMatrices build_macaulay(const std::array<MultiPoly, 4>& q) {
  static const std::vector<Monomial> cols = degree5_monomials();
  static const std::map<std::array<int, 4>, int> col_index = [] {
    std::map<std::array<int, 4>, int> idx;
    const auto monos = degree5_monomials();
    for (size_t i = 0; i < monos.size(); ++i) idx[monos[i].e] = static_cast<int>(i);
    return idx;
  }();

  const int n = static_cast<int>(cols.size());
  MacaulayMatrices mm;
  mm.numerator.assign(n, std::vector<Rational>(n, Rational(0)));
  std::vector<int> nonreduced;
  for (int r = 0; r < n; ++r) {
    const Monomial& alpha = cols[r];
    int cls = monomial_class(alpha);
    if (!is_reduced(alpha)) nonreduced.push_back(r);
    // row = (alpha / x_cls^2) * q_cls
    for (const auto& [m, c] : q[cls].terms()) {
      std::array<int, 4> e;
      for (int v = 0; v < 4; ++v) e[v] = alpha.e[v] + m.e[v];
      e[cls] -= 2;
      mm.numerator[r][col_index.at(e)] += c;
    }
  }
  mm.minor.assign(nonreduced.size(), std::vector<Rational>(nonreduced.size(), Rational(0)));
  for (size_t i = 0; i < nonreduced.size(); ++i)
    for (size_t j = 0; j < nonreduced.size(); ++j)
      mm.minor[i][j] = mm.numerator[nonreduced[i]][nonreduced[j]];
  return mm;
}

// One quotient evaluation; nullopt when the Macaulay minor vanishes.
std::optional<Rational> macaulay_quotient(const std::array<MultiPoly, 4>& q) {
  MacaulayMatrices mm = build_macaulay(q);
  Rational den = rational_det(mm.minor);
  if (den == 0) return std::nullopt;
  Rational num = rational_det(mm.numerator);
  return num / den;
}

std::array<MultiPoly, 4> transform_quadruple(const std::array<MultiPoly, 4>& q,
                                             const ProjTransform& A) {
  return {act(q[0], A), act(q[1], A), act(q[2], A), act(q[3], A)};
}

// Pencil fallback: Res(Q + t R) with R the reference quadruple (x^2, y^2,
// z^2, w^2) is a polynomial in t of degree <= 32; recover its value at t = 0
// by exact Lagrange interpolation through sample points with nonzero minors.
Rational pencil_interpolation(const std::array<MultiPoly, 4>& q) {
  std::array<MultiPoly, 4> ref;
  for (int i = 0; i < 4; ++i) {
    Monomial sq;
    sq.e[i] = 2;
    ref[i] = MultiPoly::term(sq, 1);
  }
  const int need = 33;  // degree bound 32 in the pencil parameter
  std::vector<Rational> ts, vals;
  for (int t = 1; static_cast<int>(ts.size()) < need; ++t) {
    if (t > 400) throw Error("denominator identically zero after retries");
    std::array<MultiPoly, 4> qt;
    for (int i = 0; i < 4; ++i) qt[i] = q[i] + ref[i] * Rational(t);
    auto v = macaulay_quotient(qt);
    if (!v) continue;
    ts.push_back(Rational(t));
    vals.push_back(*v);
  }
  Rational at_zero = 0;
  for (int k = 0; k < need; ++k) {
    Rational term = vals[k];
    for (int j = 0; j < need; ++j) {
      if (j == k) continue;
      term *= -ts[j] / (ts[k] - ts[j]);
    }
    at_zero += term;
  }
  return at_zero;
}

}  // namespace

QuadricQuadruple QuadricQuadruple::from(std::array<MultiPoly, 4> quadrics) {
  for (const auto& p : quadrics) {
    if (p.is_zero()) continue;
    auto d = p.homogeneous_degree();
    if (!d || *d != 2) throw Error("quadruple entry is not homogeneous of degree 2");
  }
  return QuadricQuadruple{std::move(quadrics)};
}

Rational macaulay_resultant(const QuadricQuadruple& Q) {
  if (auto v = macaulay_quotient(Q.q)) return *v;
  // Unimodular coordinate changes preserve the resultant (det^16 = 1).
  std::mt19937_64 rng(0xD15C0ULL);
  for (int attempt = 0; attempt < 3; ++attempt) {
    ProjTransform A = ProjTransform::random_unimodular(rng);
    if (auto v = macaulay_quotient(transform_quadruple(Q.q, A))) return *v;
  }
  return pencil_interpolation(Q.q);
}

DiscriminantValue discriminant(const CubicForm& f) {
  if (f.is_zero()) throw Error("discriminant of the zero form");
  auto grad = gradient(f);
  Rational value = macaulay_resultant(QuadricQuadruple::from(std::move(grad)));
  return DiscriminantValue{value, value == 0};
}

SingularityReport is_singular(const CubicForm& f, uint64_t seed) {
  SingularityReport rep;
  rep.singular = discriminant(f).is_zero;
  if (!rep.singular) return rep;

  // Numeric witness: solve grad f = 0 in P^3 via 3 random combinations of the
  // four quadrics on a random affine chart, then filter against all four.
  auto grad = gradient(f);
  PolySystem full;
  full.nvars = 4;
  for (const auto& g : grad) full.equations.push_back(CPoly::from_multipoly(g));
  auto sq = square_up(full, 3, seed ^ 0x9e3779b97f4a7c15ULL);

  std::mt19937_64 rng(seed * 2654435761u + 17);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  CPoly chart(4);
  for (int v = 0; v < 4; ++v) {
    double a = angle(rng);
    CPoly::Exponents e{};
    e[v] = 1;
    chart.add_term(e, Complex(std::cos(a), std::sin(a)));
  }
  chart.add_term({}, Complex(-1.0));

  PolySystem sys = sq.squared;
  sys.equations.push_back(chart);

  TrackerConfig cfg;
  cfg.seed = seed;
  cfg.max_path_failures = 32;  // degenerate loci stall paths by design
  auto sols = total_degree_solve(sys, cfg);
  for (const auto& s : sols.solutions) {
    if (!sq.filter(s.point)) continue;
    SingularPoint w;
    double norm = 0;
    for (int v = 0; v < 4; ++v) norm += std::norm(s.point[v]);
    norm = std::sqrt(norm);
    for (int v = 0; v < 4; ++v) w.point[v] = s.point[v] / norm;
    w.residual = full.residual(s.point);
    w.isolated = !s.singular;
    if (!w.isolated) rep.witness_isolated = false;
    rep.witnesses.push_back(w);
  }
  if (rep.witnesses.empty() || !rep.witness_isolated) {
    rep.witness_isolated = false;
    rep.note = "singular, witness not isolated";
  }
  return rep;
}

}  // namespace cubics
