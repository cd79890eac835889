#include "cubics/cubic_form.hpp"

namespace cubics {

int cubic_monomial_index(const Monomial& m) {
  for (int i = 0; i < kNumCubicCoeffs; ++i) {
    if (kCubicMonomials[i] == m.e) return i;
  }
  return -1;
}

CubicForm CubicForm::from_poly(const MultiPoly& p) {
  if (p.is_zero()) throw Error("not homogeneous of degree 3");
  auto hd = p.homogeneous_degree();
  if (!hd || *hd != 3) throw Error("not homogeneous of degree 3");
  CubicForm f;
  for (const auto& [m, c] : p.terms()) {
    int idx = cubic_monomial_index(m);
    f.c_[idx] = c;
  }
  return f;
}

MultiPoly CubicForm::to_poly() const {
  MultiPoly p;
  for (int i = 0; i < kNumCubicCoeffs; ++i) {
    if (c_[i] == 0) continue;
    Monomial m;
    m.e = kCubicMonomials[i];
    p.add_term(m, c_[i]);
  }
  return p;
}

bool CubicForm::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

Rational CubicForm::evaluate(const std::array<Rational, 4>& pt) const {
  Rational acc = 0;
  for (int i = 0; i < kNumCubicCoeffs; ++i) {
    if (c_[i] == 0) continue;
    Rational t = c_[i];
    for (int v = 0; v < 4; ++v)
      for (int k = 0; k < kCubicMonomials[i][v]; ++k) t *= pt[v];
    acc += t;
  }
  return acc;
}

std::complex<double> CubicForm::evaluate(const std::array<std::complex<double>, 4>& pt) const {
  std::complex<double> acc = 0;
  for (int i = 0; i < kNumCubicCoeffs; ++i) {
    if (c_[i] == 0) continue;
    std::complex<double> t = to_double(c_[i]);
    for (int v = 0; v < 4; ++v)
      for (int k = 0; k < kCubicMonomials[i][v]; ++k) t *= pt[v];
    acc += t;
  }
  return acc;
}

std::array<MultiPoly, 4> gradient(const CubicForm& f) {
  MultiPoly p = f.to_poly();
  return {p.derivative(0), p.derivative(1), p.derivative(2), p.derivative(3)};
}

MultiPoly hessian_det(const CubicForm& f) {
  MultiPoly p = f.to_poly();
  MultiPoly h[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      h[i][j] = p.derivative(i).derivative(j);
      h[j][i] = h[i][j];
    }
  // Laplace expansion over permutations of S4; 24 products of 4 linear forms.
  static constexpr int perms[24][4] = {
      {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1},
      {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0}, {1, 3, 0, 2}, {1, 3, 2, 0},
      {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0},
      {3, 0, 1, 2}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};
  static constexpr int signs[24] = {1, -1, -1, 1,  1,  -1, -1, 1,  1,  -1, -1, 1,
                                    1, -1, -1, 1,  1,  -1, -1, 1,  1,  -1, -1, 1};
  MultiPoly det;
  for (int k = 0; k < 24; ++k) {
    MultiPoly prod = h[0][perms[k][0]] * h[1][perms[k][1]];
    prod = prod * h[2][perms[k][2]];
    prod = prod * h[3][perms[k][3]];
    det = signs[k] > 0 ? det + prod : det - prod;
  }
  return det;
}

}  // namespace cubics
