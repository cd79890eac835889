#include "cubics/transform.hpp"

namespace cubics {

ProjTransform ProjTransform::random_invertible(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m[i][j] = dist(rng);
    ProjTransform t(m);
    if (t.det() != 0) return t;
  }
  throw Error("failed to sample an invertible transform");
}

ProjTransform ProjTransform::random_rational(std::mt19937_64& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m[i][j] = Rational(num(rng), den(rng));
    ProjTransform t(m);
    if (t.det() != 0) return t;
  }
  throw Error("failed to sample an invertible transform");
}

ProjTransform ProjTransform::random_unimodular(std::mt19937_64& rng, int steps) {
  std::uniform_int_distribution<int> row(0, 3);
  std::uniform_int_distribution<int> val(-2, 2);
  ProjTransform t;
  for (int s = 0; s < steps; ++s) {
    int i = row(rng), j = row(rng);
    if (i == j) continue;
    int k = val(rng);
    if (k == 0) k = 1;
    // row_i += k * row_j keeps det = +-1
    for (int c = 0; c < 4; ++c) t.m_[i][c] += Rational(k) * t.m_[j][c];
  }
  return t;
}

Rational ProjTransform::det() const {
  // Gaussian elimination on a copy; exact.
  Matrix a = m_;
  Rational d = 1;
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      d = -d;
    }
    d *= a[col][col];
    for (int r = col + 1; r < 4; ++r) {
      if (a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return d;
}

ProjTransform ProjTransform::inverse() const {
  Matrix a = m_;
  Matrix inv{};
  for (int i = 0; i < 4; ++i) inv[i][i] = 1;
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw Error("singular matrix");
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(inv[piv], inv[col]);
    }
    Rational p = a[col][col];
    for (int c = 0; c < 4; ++c) {
      a[col][c] /= p;
      inv[col][c] /= p;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational factor = a[r][col];
      for (int c = 0; c < 4; ++c) {
        a[r][c] -= factor * a[col][c];
        inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return ProjTransform(inv);
}

ProjTransform ProjTransform::operator*(const ProjTransform& o) const {
  Matrix r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Rational s = 0;
      for (int k = 0; k < 4; ++k) s += m_[i][k] * o.m_[k][j];
      r[i][j] = s;
    }
  return ProjTransform(r);
}

std::array<Rational, 4> ProjTransform::apply(const std::array<Rational, 4>& v) const {
  std::array<Rational, 4> r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += m_[i][j] * v[j];
  return r;
}

std::array<std::complex<double>, 4> ProjTransform::apply(
    const std::array<std::complex<double>, 4>& v) const {
  std::array<std::complex<double>, 4> r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += to_double(m_[i][j]) * v[j];
  return r;
}

MultiPoly act(const MultiPoly& p, const ProjTransform& A) {
  // Substituted variables: x_i -> sum_j A[i][j] x_j.
  std::array<MultiPoly, 4> sub;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (A.at(i, j) == 0) continue;
      Monomial xj;
      xj.e[j] = 1;
      sub[i].add_term(xj, A.at(i, j));
    }
  }
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    MultiPoly t{c};
    for (int v = 0; v < 4; ++v)
      for (int k = 0; k < m.e[v]; ++k) t = t * sub[v];
    out = out + t;
  }
  return out;
}

CubicForm act(const CubicForm& f, const ProjTransform& A) {
  if (A.det() == 0) throw Error("singular matrix");
  return CubicForm::from_poly(act(f.to_poly(), A));
}

}  // namespace cubics
