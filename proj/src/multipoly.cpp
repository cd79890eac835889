#include "cubics/multipoly.hpp"

#include <sstream>

namespace cubics {

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_[Monomial{}] = c;
}

MultiPoly MultiPoly::variable(int var) {
  Monomial m;
  m.e[var] = 1;
  return term(m, 1);
}

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
  MultiPoly p;
  if (c != 0) p.terms_[m] = c;
  return p;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();  // graded order: first term is top degree
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m;
      for (int v = 0; v < kNumVars; ++v) m.e[v] = ma.e[v] + mb.e[v];
      r.add_term(m, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  MultiPoly r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
  return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.e[var] == 0) continue;
    Monomial d = m;
    d.e[var] -= 1;
    r.add_term(d, c * m.e[var]);
  }
  return r;
}

Rational MultiPoly::evaluate(const std::array<Rational, kNumVars>& pt) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < kNumVars; ++v)
      for (int k = 0; k < m.e[v]; ++k) t *= pt[v];
    acc += t;
  }
  return acc;
}

std::string Monomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (int v = 0; v < kNumVars; ++v) {
    if (e[v] == 0) continue;
    if (!first) os << "*";
    os << kVarNames[v];
    if (e[v] > 1) os << "^" << e[v];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (m.degree() == 0) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << "*";
      os << m.str();
    }
    first = false;
  }
  return os.str();
}

}  // namespace cubics
