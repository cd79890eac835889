#pragma once

#include <array>
#include <vector>

#include "cubics/cubic_form.hpp"
#include "cubics/solver.hpp"
#include "cubics/transform.hpp"

namespace cubics {

using CVec4 = std::array<Complex, 4>;
using QVec4 = std::array<QuadComplex, 4>;

// A line in P^3: two orthonormal spanning points plus the normalized Pluecker
// vector (p12, p13, p14, p23, p24, p34) under a deterministic phase
// convention (largest-modulus entry real positive).
struct Line {
  CVec4 span_u{}, span_v{};
  std::array<Complex, 6> pluecker{};
  bool is_real = false;
  double restriction_residual = 0;  // max binary-cubic coefficient / |f|
  double pluecker_residual = 0;     // Pluecker quadric defect
};

// Quadruple-precision shadow of a line, used when an incidence or concurrency
// decision falls in the ambiguity band.
struct LineExt {
  QVec4 u{}, v{};
  std::array<QuadComplex, 6> pluecker{};
};

struct LinesConfig {
  TrackerConfig tracker;
  double incidence_tol = 1e-7;
  double restriction_tol = 1e-8;
  double real_tol = 1e-8;
  double plane_tol = 1e-7;
  double eckardt_tol = 1e-7;
  int transform_attempts = 3;  // fresh seeded transforms if fewer than 27 show up
};

struct LineSet27 {
  std::vector<Line> lines;          // canonically ordered
  std::vector<LineExt> ext;         // parallel to lines
  CubicForm surface;
  uint64_t seed = 0;
  PathStats stats;
  bool complete = false;            // exactly 27 clean lines
  double max_restriction_residual = 0;
  double max_pluecker_residual = 0;
  std::string flags;                // diagnostic notes for degenerate inputs
};

struct IncidenceGraph {
  std::array<std::array<bool, 27>, 27> adjacency{};
  int edges = 0;

  bool meet(int i, int j) const { return adjacency[i][j]; }
  int degree(int i) const;
};

struct TritangentPlane {
  CVec4 plane{};                  // linear form through the three lines
  std::array<int, 3> line_triple{};
  double fit_residual = 0;
};

struct DoubleSix {
  std::array<int, 6> first{};
  std::array<int, 6> second{};  // first[i] is skew to second[i], meets the rest
};

struct EckardtPoint {
  CVec4 point{};
  std::array<int, 3> line_triple{};
  double spread = 0;  // max pairwise distance of the three intersections
};

enum class MeetResult { Disjoint, Meets, Ambiguous };

// Finds the 27 lines by a seeded random coordinate change, the chart
// x = a z + b w, y = c z + d w, and an 81-path total-degree solve. Singular
// or ill-conditioned surfaces yield fewer lines with flags set instead of an
// exception.
LineSet27 find_lines(const CubicForm& f, const LinesConfig& cfg = {});

// The four chart equations (coefficients of z^3, z^2 w, z w^2, w^3 of the
// restricted cubic) for lines of f visible in the chart after the coordinate
// change A; degree <= 3 each in the chart unknowns (a, b, c, d).
PolySystem line_chart_system(const CubicForm& f, const ProjTransform& A);

// Pluecker pairing test; Ambiguous when the pairing falls within 10x of the
// tolerance, which forces a higher-precision recheck.
MeetResult meets(const Line& a, const Line& b, double tol = 1e-7);

// Pairwise incidence of all 27 lines; requires a complete line set, asserts
// 10-regularity (135 edges) and resolves ambiguous pairs in quad precision.
IncidenceGraph incidence_graph(const LineSet27& L, const LinesConfig& cfg = {});

// Coplanar triangles of the incidence graph; 45 for a smooth surface.
std::vector<TritangentPlane> tritangent_planes(const LineSet27& L, const IncidenceGraph& graph,
                                               const LinesConfig& cfg = {});

// Schlaefli double-sixes enumerated combinatorially from the graph; 36.
std::vector<DoubleSix> double_sixes(const IncidenceGraph& graph);

// Concurrency points of tritangent-plane triples.
std::vector<EckardtPoint> eckardt_points(const LineSet27& L,
                                         const std::vector<TritangentPlane>& planes,
                                         const LinesConfig& cfg = {});

struct RealCensus {
  int real_lines = 0;
  int conjugate_pairs = 0;
};

// Counts lines whose Pluecker vector is real after phase normalization;
// requires real input coefficients and checks real + 2 pairs = 27.
RealCensus real_line_census(const LineSet27& L, const LinesConfig& cfg = {});

// Builds a Line (normalized span, Pluecker vector, reality flag) from two
// spanning points; the restriction residual is left at zero.
Line make_line(const CVec4& p, const CVec4& q, double real_tol = 1e-8);

// Two orthonormal linear forms vanishing on the line.
std::array<CVec4, 2> line_planes(const Line& line);

// Intersection point of two meeting lines (unit-normalized projective rep).
CVec4 intersection_point(const Line& a, const Line& b);

}  // namespace cubics
