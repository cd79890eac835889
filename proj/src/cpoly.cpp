#include "cubics/cpoly.hpp"

#include <algorithm>
#include <cmath>

namespace cubics {

namespace {
bool exp_less(const CPoly::Exponents& a, const CPoly::Exponents& b) { return a < b; }
}  // namespace

CPoly CPoly::constant(int nvars, Complex c) {
  CPoly p(nvars);
  p.add_term({0, 0, 0, 0}, c);
  return p;
}

CPoly CPoly::variable(int nvars, int var) {
  CPoly p(nvars);
  Exponents e{};
  e[var] = 1;
  p.add_term(e, Complex(1.0));
  return p;
}

CPoly CPoly::from_multipoly(const MultiPoly& p, int nvars) {
  CPoly out(nvars);
  for (const auto& [m, c] : p.terms()) {
    Exponents e{};
    for (int v = 0; v < kNumVars; ++v) e[v] = m.e[v];
    out.add_term(e, Complex(to_double(c)));
  }
  return out;
}

int CPoly::degree() const {
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (int v = 0; v < kMaxPolyVars; ++v) s += t.e[v];
    d = std::max(d, s);
  }
  return d;
}

void CPoly::add_term(const Exponents& e, Complex c) {
  if (c == Complex(0.0)) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponents& key) { return exp_less(t.e, key); });
  if (it != terms_.end() && it->e == e) {
    it->c += c;
    if (it->c == Complex(0.0)) terms_.erase(it);
  } else {
    terms_.insert(it, Term{e, c});
  }
}

CPoly CPoly::operator+(const CPoly& o) const {
  CPoly r = *this;
  for (const auto& t : o.terms_) r.add_term(t.e, t.c);
  return r;
}

CPoly CPoly::operator-(const CPoly& o) const {
  CPoly r = *this;
  for (const auto& t : o.terms_) r.add_term(t.e, -t.c);
  return r;
}

CPoly CPoly::operator*(const CPoly& o) const {
  CPoly r(nvars_);
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Exponents e;
      for (int i = 0; i < kMaxPolyVars; ++i) e[i] = a.e[i] + b.e[i];
      r.add_term(e, a.c * b.c);
    }
  return r;
}

CPoly CPoly::operator*(Complex s) const {
  CPoly r(nvars_);
  for (const auto& t : terms_) r.add_term(t.e, t.c * s);
  return r;
}

CPoly CPoly::derivative(int var) const {
  CPoly r(nvars_);
  for (const auto& t : terms_) {
    if (t.e[var] == 0) continue;
    Exponents e = t.e;
    e[var] -= 1;
    r.add_term(e, t.c * Complex(double(t.e[var])));
  }
  return r;
}

double CPoly::coeff_scale() const {
  double s = 0;
  for (const auto& t : terms_) s = std::max(s, std::abs(t.c));
  return s > 0 ? s : 1.0;
}

Complex CPoly::evaluate(const std::vector<Complex>& x) const {
  Complex acc = 0;
  for (const auto& t : terms_) {
    Complex v = t.c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < t.e[i]; ++k) v *= x[i];
    acc += v;
  }
  return acc;
}

}  // namespace cubics
