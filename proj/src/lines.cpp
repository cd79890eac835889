#include "cubics/lines.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace cubics {

namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

double qmag(const QuadComplex& z) { return abs(z).convert_to<double>(); }
Complex to_cd(const QuadComplex& z) {
  return Complex(z.real().convert_to<double>(), z.imag().convert_to<double>());
}

QuadComplex qconj(const QuadComplex& z) { return QuadComplex(z.real(), -z.imag()); }

using QReal = QuadComplex::value_type;

QReal qnorm2(const QVec4& v) {
  QReal s = 0;
  for (const auto& z : v) s += z.real() * z.real() + z.imag() * z.imag();
  return s;
}

// Orthonormalizes {u, v} in place (hermitian inner product).
void orthonormalize(QVec4& u, QVec4& v) {
  QReal nu = sqrt(qnorm2(u));
  for (auto& z : u) z /= nu;
  QuadComplex dot = 0;
  for (int i = 0; i < 4; ++i) dot += qconj(u[i]) * v[i];
  for (int i = 0; i < 4; ++i) v[i] -= dot * u[i];
  QReal nv = sqrt(qnorm2(v));
  for (auto& z : v) z /= nv;
}

std::array<QuadComplex, 6> pluecker_of(const QVec4& u, const QVec4& v) {
  std::array<QuadComplex, 6> p;
  for (int k = 0; k < 6; ++k) {
    int i = kPairs[k][0], j = kPairs[k][1];
    p[k] = u[i] * v[j] - u[j] * v[i];
  }
  return p;
}

// Unit norm, then rotate so the largest-modulus entry (smallest index within
// a 1e-9 relative window) is real positive.
void normalize_pluecker(std::array<QuadComplex, 6>& p) {
  QReal n2 = 0;
  for (const auto& z : p) n2 += z.real() * z.real() + z.imag() * z.imag();
  QReal n = sqrt(n2);
  for (auto& z : p) z /= n;
  double best = 0;
  for (const auto& z : p) best = std::max(best, qmag(z));
  int k = 0;
  for (; k < 6; ++k)
    if (qmag(p[k]) >= best * (1.0 - 1e-9)) break;
  QuadComplex phase = qconj(p[k]) / abs(p[k]);
  for (auto& z : p) z *= phase;
}

template <class T>
T pairing(const std::array<T, 6>& p, const std::array<T, 6>& q) {
  return p[0] * q[5] - p[1] * q[4] + p[2] * q[3] + p[3] * q[2] - p[4] * q[1] + p[5] * q[0];
}

double restriction_residual_of(const CubicForm& f, const CVec4& u, const CVec4& v) {
  auto at = [&](double s, double t) {
    std::array<Complex, 4> pt;
    for (int i = 0; i < 4; ++i) pt[i] = s * u[i] + t * v[i];
    return f.evaluate(pt);
  };
  // binary cubic r(s,t) = c0 s^3 + c1 s^2 t + c2 s t^2 + c3 t^3 from 4 samples
  Complex c0 = at(1, 0), c3 = at(0, 1);
  Complex rp = at(1, 1), rm = at(1, -1);
  Complex c2 = (rp + rm) * 0.5 - c0;
  Complex c1 = (rp - rm) * 0.5 - c3;
  double fscale = 0;
  for (const auto& c : f.coeffs()) fscale += to_double(c) * to_double(c);
  fscale = std::max(std::sqrt(fscale), 1e-30);
  double m = std::max({std::abs(c0), std::abs(c1), std::abs(c2), std::abs(c3)});
  return m / fscale;
}

struct BuiltLine {
  Line line;
  LineExt ext;
};

BuiltLine build_line(const CubicForm& f, QVec4 u, QVec4 v, double real_tol) {
  orthonormalize(u, v);
  auto pq = pluecker_of(u, v);
  normalize_pluecker(pq);

  BuiltLine out;
  out.ext.u = u;
  out.ext.v = v;
  out.ext.pluecker = pq;
  for (int i = 0; i < 4; ++i) {
    out.line.span_u[i] = to_cd(u[i]);
    out.line.span_v[i] = to_cd(v[i]);
  }
  for (int k = 0; k < 6; ++k) out.line.pluecker[k] = to_cd(pq[k]);

  double im = 0;
  for (int k = 0; k < 6; ++k) im = std::max(im, std::abs(out.line.pluecker[k].imag()));
  if (im < real_tol) {
    out.line.is_real = true;
  } else if (im < 10 * real_tol) {
    // ambiguity band: decide in quad precision
    double imq = 0;
    for (int k = 0; k < 6; ++k) imq = std::max(imq, std::abs(pq[k].imag().convert_to<double>()));
    out.line.is_real = imq < 1e-20;
  } else {
    out.line.is_real = false;
  }

  out.line.restriction_residual = restriction_residual_of(f, out.line.span_u, out.line.span_v);
  out.line.pluecker_residual =
      std::abs(out.line.pluecker[0] * out.line.pluecker[5] -
               out.line.pluecker[1] * out.line.pluecker[4] +
               out.line.pluecker[2] * out.line.pluecker[3]);
  return out;
}

std::array<long long, 12> sort_key(const Line& l) {
  std::array<long long, 12> k;
  for (int i = 0; i < 6; ++i) {
    k[2 * i] = llround(l.pluecker[i].real() * 1e8);
    k[2 * i + 1] = llround(l.pluecker[i].imag() * 1e8);
  }
  return k;
}

int binom(int n, int k) {
  static const int table[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
  return table[n][k];
}

MeetResult classify_pairing(double val, double tol) {
  if (val < tol) return MeetResult::Meets;
  if (val < 10 * tol) return MeetResult::Ambiguous;
  return MeetResult::Disjoint;
}

bool meets_quad(const LineExt& a, const LineExt& b) {
  double v = qmag(pairing(a.pluecker, b.pluecker));
  if (v < 1e-18) return true;
  if (v > 1e-13) return false;
  throw Error("incidence ambiguous even in extended precision");
}

CVec4 normalize_point(CVec4 p) {
  double n = 0;
  for (const auto& z : p) n += std::norm(z);
  n = std::sqrt(n);
  double best = 0;
  int k = 0;
  for (int i = 0; i < 4; ++i) best = std::max(best, std::abs(p[i]));
  for (; k < 4; ++k)
    if (std::abs(p[k]) >= best * (1.0 - 1e-9)) break;
  Complex phase = std::conj(p[k]) / std::abs(p[k]);
  for (auto& z : p) z *= phase / n;
  return p;
}

double chordal(const CVec4& a, const CVec4& b) {
  Complex dot = 0;
  for (int i = 0; i < 4; ++i) dot += std::conj(a[i]) * b[i];
  double c = std::min(1.0, std::abs(dot));
  return std::sqrt(std::max(0.0, 1.0 - c * c));
}

QVec4 quad_intersection(const LineExt& a, const LineExt& b) {
  // null vector of the 4x4 system [u1 v1 u2 v2] by full-pivot elimination
  std::array<std::array<QuadComplex, 4>, 4> m;
  for (int i = 0; i < 4; ++i) {
    m[i][0] = a.u[i];
    m[i][1] = a.v[i];
    m[i][2] = b.u[i];
    m[i][3] = b.v[i];
  }
  std::array<int, 4> colperm{0, 1, 2, 3};
  int rank = 0;
  for (int step = 0; step < 3; ++step) {
    int pr = -1, pc = -1;
    double best = 1e-30;
    for (int r = step; r < 4; ++r)
      for (int c = step; c < 4; ++c)
        if (qmag(m[r][c]) > best) {
          best = qmag(m[r][c]);
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    std::swap(m[pr], m[step]);
    for (int r = 0; r < 4; ++r) std::swap(m[r][pc], m[r][step]);
    std::swap(colperm[pc], colperm[step]);
    ++rank;
    for (int r = step + 1; r < 4; ++r) {
      QuadComplex fct = m[r][step] / m[step][step];
      for (int c = step; c < 4; ++c) m[r][c] -= fct * m[step][c];
    }
  }
  // free variable = permuted column 3
  std::array<QuadComplex, 4> sol{};
  sol[3] = 1;
  for (int r = rank - 1; r >= 0; --r) {
    QuadComplex s = 0;
    for (int c = r + 1; c < 4; ++c) s += m[r][c] * sol[c];
    sol[r] = -s / m[r][r];
  }
  std::array<QuadComplex, 4> coeffs{};
  for (int c = 0; c < 4; ++c) coeffs[colperm[c]] = sol[c];
  QVec4 pt;
  for (int i = 0; i < 4; ++i) pt[i] = coeffs[0] * a.u[i] + coeffs[1] * a.v[i];
  QReal n = sqrt(qnorm2(pt));
  for (auto& z : pt) z /= n;
  return pt;
}

double quad_chordal(const QVec4& a, const QVec4& b) {
  QuadComplex dot = 0;
  for (int i = 0; i < 4; ++i) dot += qconj(a[i]) * b[i];
  double c = std::min(1.0, qmag(dot));
  return std::sqrt(std::max(0.0, 1.0 - c * c));
}

}  // namespace

int IncidenceGraph::degree(int i) const {
  int d = 0;
  for (int j = 0; j < 27; ++j)
    if (adjacency[i][j]) ++d;
  return d;
}

PolySystem line_chart_system(const CubicForm& f, const ProjTransform& A) {
  CubicForm g = act(f, A);
  // restrict g to x = a z + b w, y = c z + d w and collect by z-degree
  std::array<MultiPoly, 4> eq;  // [0] z^3 ... [3] w^3
  for (int idx = 0; idx < kNumCubicCoeffs; ++idx) {
    const Rational& coeff = g[idx];
    if (coeff == 0) continue;
    const auto& e = kCubicMonomials[idx];
    for (int k = 0; k <= e[0]; ++k)
      for (int l = 0; l <= e[1]; ++l) {
        int zdeg = k + l + e[2];
        Monomial m;
        m.e = {k, e[0] - k, l, e[1] - l};  // a^k b^{e1-k} c^l d^{e2-l}
        Rational c = coeff * binom(e[0], k) * binom(e[1], l);
        eq[3 - zdeg].add_term(m, c);
      }
  }
  PolySystem sys;
  sys.nvars = 4;
  for (const auto& p : eq) sys.equations.push_back(CPoly::from_multipoly(p));
  return sys;
}

LineSet27 find_lines(const CubicForm& f, const LinesConfig& cfg) {
  if (f.is_zero()) throw Error("zero form has no line geometry");
  std::mt19937_64 rng(cfg.tracker.seed ^ 0x11e55ULL);

  LineSet27 best;
  best.surface = f;
  best.seed = cfg.tracker.seed;

  for (int attempt = 0; attempt < std::max(1, cfg.transform_attempts); ++attempt) {
    ProjTransform A = ProjTransform::random_rational(rng);
    PolySystem sys = line_chart_system(f, A);

    TrackerConfig tcfg = cfg.tracker;
    tcfg.seed = cfg.tracker.seed + 0x9e3779b9ULL * attempt;
    tcfg.max_path_failures = 81;  // degenerate surfaces are reported, not thrown
    SolutionSet sols = total_degree_solve(sys, tcfg);

    LineSet27 cur;
    cur.surface = f;
    cur.seed = cfg.tracker.seed;
    cur.stats = sols.stats;
    for (const auto& s : sols.solutions) {
      auto xq = refine_extended(s.point, sys, 5);
      QVec4 p1{xq[0], xq[2], QuadComplex(1), QuadComplex(0)};
      QVec4 p2{xq[1], xq[3], QuadComplex(0), QuadComplex(1)};
      QVec4 u{}, v{};
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          QuadComplex aij(to_double(A.at(i, j)));
          u[i] += aij * p1[j];
          v[i] += aij * p2[j];
        }
      }
      BuiltLine bl = build_line(f, u, v, cfg.real_tol);
      if (s.singular) {
        cur.flags += cur.flags.empty() ? "" : "; ";
        cur.flags += "singular chart solution";
      }
      cur.max_restriction_residual =
          std::max(cur.max_restriction_residual, bl.line.restriction_residual);
      cur.max_pluecker_residual = std::max(cur.max_pluecker_residual, bl.line.pluecker_residual);
      cur.lines.push_back(std::move(bl.line));
      cur.ext.push_back(std::move(bl.ext));
    }

    // canonical order: lexicographic by rounded Pluecker vector
    std::vector<int> order(cur.lines.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return sort_key(cur.lines[i]) < sort_key(cur.lines[j]); });
    LineSet27 sorted = cur;
    sorted.lines.clear();
    sorted.ext.clear();
    for (int i : order) {
      sorted.lines.push_back(cur.lines[i]);
      sorted.ext.push_back(cur.ext[i]);
    }
    sorted.complete = sorted.lines.size() == 27 && sorted.stats.failed == 0 &&
                      sorted.max_restriction_residual < cfg.restriction_tol &&
                      sorted.flags.empty();
    if (sorted.complete) return sorted;
    if (sorted.lines.size() > best.lines.size()) best = sorted;
  }
  if (best.flags.empty()) {
    best.flags = "fewer than 27 lines found: " + std::to_string(best.lines.size()) +
                 " (diverged " + std::to_string(best.stats.diverged) + ", failed " +
                 std::to_string(best.stats.failed) + " of " + std::to_string(best.stats.tracked) +
                 " paths); surface may be singular";
  }
  return best;
}

MeetResult meets(const Line& a, const Line& b, double tol) {
  double v = std::abs(pairing(a.pluecker, b.pluecker));
  return classify_pairing(v, tol);
}

IncidenceGraph incidence_graph(const LineSet27& L, const LinesConfig& cfg) {
  if (L.lines.size() != 27 || !L.complete)
    throw Error("incidence graph requires a complete set of 27 lines");
  IncidenceGraph g;
  for (int i = 0; i < 27; ++i)
    for (int j = i + 1; j < 27; ++j) {
      MeetResult r = meets(L.lines[i], L.lines[j], cfg.incidence_tol);
      bool meet = r == MeetResult::Meets;
      if (r == MeetResult::Ambiguous) meet = meets_quad(L.ext[i], L.ext[j]);
      g.adjacency[i][j] = g.adjacency[j][i] = meet;
      if (meet) ++g.edges;
    }
  for (int i = 0; i < 27; ++i)
    if (g.degree(i) != 10)
      throw Error("incidence graph is not 10-regular at line " + std::to_string(i) +
                  " (degree " + std::to_string(g.degree(i)) + "); numerics suspect");
  return g;
}

std::vector<TritangentPlane> tritangent_planes(const LineSet27& L, const IncidenceGraph& graph,
                                               const LinesConfig& cfg) {
  std::vector<TritangentPlane> out;
  for (int i = 0; i < 27; ++i)
    for (int j = i + 1; j < 27; ++j) {
      if (!graph.meet(i, j)) continue;
      for (int k = j + 1; k < 27; ++k) {
        if (!graph.meet(i, k) || !graph.meet(j, k)) continue;
        Eigen::MatrixXcd M(6, 4);
        const int idx[3] = {i, j, k};
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 4; ++c) {
            M(2 * r, c) = L.lines[idx[r]].span_u[c];
            M(2 * r + 1, c) = L.lines[idx[r]].span_v[c];
          }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullV);
        double rel = svd.singularValues()(3) / svd.singularValues()(0);
        if (rel > cfg.plane_tol)
          throw Error("three pairwise incident lines are not coplanar (defect " +
                      std::to_string(rel) + "); numerics suspect");
        TritangentPlane tp;
        for (int c = 0; c < 4; ++c) tp.plane[c] = svd.matrixV()(c, 3);
        tp.plane = normalize_point(tp.plane);
        tp.line_triple = {i, j, k};
        tp.fit_residual = rel;
        out.push_back(tp);
      }
    }
  return out;
}

std::vector<DoubleSix> double_sixes(const IncidenceGraph& graph) {
  // 6-cliques of the skew (complement) graph, then the unique complementary
  // sixer via cross-incidence.
  std::array<uint32_t, 27> skew{};
  for (int i = 0; i < 27; ++i)
    for (int j = 0; j < 27; ++j)
      if (i != j && !graph.meet(i, j)) skew[i] |= 1u << j;

  std::vector<std::array<int, 6>> sixers;
  std::array<int, 6> chosen{};
  auto rec = [&](auto&& self, int depth, int minv, uint32_t cand) -> void {
    if (depth == 6) {
      sixers.push_back(chosen);
      return;
    }
    for (int v = minv; v < 27; ++v) {
      if (!(cand & (1u << v))) continue;
      chosen[depth] = v;
      self(self, depth + 1, v + 1, cand & skew[v]);
    }
  };
  rec(rec, 0, 0, (1u << 27) - 1);

  std::set<std::pair<std::array<int, 6>, std::array<int, 6>>> seen;
  std::vector<DoubleSix> out;
  for (const auto& A : sixers) {
    uint32_t amask = 0;
    for (int a : A) amask |= 1u << a;
    std::array<int, 6> B{};
    bool ok = true;
    for (int i = 0; i < 6 && ok; ++i) {
      int found = -1;
      for (int l = 0; l < 27; ++l) {
        if (amask & (1u << l)) continue;
        if (graph.meet(l, A[i])) continue;  // must be skew to A[i]
        bool meets_rest = true;
        for (int j = 0; j < 6; ++j)
          if (j != i && !graph.meet(l, A[j])) {
            meets_rest = false;
            break;
          }
        if (!meets_rest) continue;
        if (found >= 0) {
          ok = false;  // not unique
          break;
        }
        found = l;
      }
      if (found < 0) ok = false;
      if (ok) B[i] = found;
    }
    if (!ok) continue;
    // validate: B pairwise skew
    for (int i = 0; i < 6 && ok; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (graph.meet(B[i], B[j])) {
          ok = false;
          break;
        }
    if (!ok) continue;
    std::array<int, 6> a_sorted = A, b_sorted = B;
    std::sort(b_sorted.begin(), b_sorted.end());
    auto key = a_sorted < b_sorted ? std::make_pair(a_sorted, b_sorted)
                                   : std::make_pair(b_sorted, a_sorted);
    if (seen.insert(key).second) out.push_back(DoubleSix{A, B});
  }
  if (out.size() != 36)
    throw Error("double-six count " + std::to_string(out.size()) + " != 36; numerics suspect");
  return out;
}

std::vector<EckardtPoint> eckardt_points(const LineSet27& L,
                                         const std::vector<TritangentPlane>& planes,
                                         const LinesConfig& cfg) {
  std::vector<EckardtPoint> out;
  for (const auto& tp : planes) {
    auto [i, j, k] = std::tuple{tp.line_triple[0], tp.line_triple[1], tp.line_triple[2]};
    CVec4 pij = intersection_point(L.lines[i], L.lines[j]);
    CVec4 pik = intersection_point(L.lines[i], L.lines[k]);
    CVec4 pjk = intersection_point(L.lines[j], L.lines[k]);
    double spread = std::max({chordal(pij, pik), chordal(pij, pjk), chordal(pik, pjk)});
    bool concurrent;
    if (spread < cfg.eckardt_tol) {
      concurrent = true;
    } else if (spread < 10 * cfg.eckardt_tol) {
      // borderline: recheck in quad precision
      QVec4 qij = quad_intersection(L.ext[i], L.ext[j]);
      QVec4 qik = quad_intersection(L.ext[i], L.ext[k]);
      QVec4 qjk = quad_intersection(L.ext[j], L.ext[k]);
      double qs = std::max({quad_chordal(qij, qik), quad_chordal(qij, qjk), quad_chordal(qik, qjk)});
      if (qs < 1e-12) {
        concurrent = true;
      } else if (qs > 1e-11) {
        concurrent = false;
      } else {
        throw Error("Eckardt concurrency ambiguous even in extended precision");
      }
    } else {
      concurrent = false;
    }
    if (concurrent) {
      EckardtPoint ep;
      ep.point = normalize_point(pij);
      ep.line_triple = tp.line_triple;
      ep.spread = spread;
      out.push_back(ep);
    }
  }
  return out;
}

RealCensus real_line_census(const LineSet27& L, const LinesConfig&) {
  if (L.lines.size() != 27)
    throw Error("real census requires a complete set of 27 lines");
  RealCensus c;
  for (const auto& l : L.lines)
    if (l.is_real) ++c.real_lines;
  if ((27 - c.real_lines) % 2 != 0)
    throw Error("real census parity violated: " + std::to_string(c.real_lines) + " real lines");
  c.conjugate_pairs = (27 - c.real_lines) / 2;
  return c;
}

std::array<CVec4, 2> line_planes(const Line& line) {
  Eigen::MatrixXcd M(2, 4);
  for (int c = 0; c < 4; ++c) {
    M(0, c) = line.span_u[c];
    M(1, c) = line.span_v[c];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullV);
  std::array<CVec4, 2> planes;
  for (int p = 0; p < 2; ++p)
    for (int c = 0; c < 4; ++c) planes[p][c] = svd.matrixV()(c, 2 + p);
  return planes;
}

CVec4 intersection_point(const Line& a, const Line& b) {
  Eigen::MatrixXcd M(4, 4);
  for (int r = 0; r < 4; ++r) {
    M(r, 0) = a.span_u[r];
    M(r, 1) = a.span_v[r];
    M(r, 2) = b.span_u[r];
    M(r, 3) = b.span_v[r];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullV);
  Complex alpha = svd.matrixV()(0, 3), beta = svd.matrixV()(1, 3);
  CVec4 pt;
  for (int r = 0; r < 4; ++r) pt[r] = alpha * a.span_u[r] + beta * a.span_v[r];
  return normalize_point(pt);
}

Line make_line(const CVec4& p, const CVec4& q, double real_tol) {
  QVec4 u, v;
  for (int i = 0; i < 4; ++i) {
    u[i] = QuadComplex(p[i].real(), p[i].imag());
    v[i] = QuadComplex(q[i].real(), q[i].imag());
  }
  std::array<Rational, kNumCubicCoeffs> c{};
  c[0] = 1;  // placeholder surface; the caller owns any restriction check
  BuiltLine bl = build_line(CubicForm(c), u, v, real_tol);
  bl.line.restriction_residual = 0;
  return bl.line;
}

}  // namespace cubics
