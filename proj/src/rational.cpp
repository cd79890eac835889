#include "cubics/rational.hpp"

namespace cubics {

Rational rational_from_string(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error("empty rational literal");
  try {
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      size_t frac_len = s.size() - dot - 1;
      Int num(digits);
      Int den = 1;
      for (size_t i = 0; i < frac_len; ++i) den *= 10;
      return Rational(num, den);
    }
    return Rational(s);
  } catch (const std::exception&) {
    throw Error("bad rational literal: '" + text + "'");
  }
}

int padic_order(Int n, const Int& p) {
  if (n == 0) throw Error("padic_order of zero");
  if (n < 0) n = -n;
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

std::optional<Rational> padic_valuation(const Rational& q, const Int& p) {
  if (q == 0) return std::nullopt;
  return Rational(padic_order(numerator(q), p) - padic_order(denominator(q), p));
}

}  // namespace cubics
