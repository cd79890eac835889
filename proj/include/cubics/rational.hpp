#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace cubics {

// Exact arbitrary-precision arithmetic. GMP keeps rationals canonical:
// positive denominator, gcd(|num|, den) = 1.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Base class for computation failures (singular input, solver budget
// exhausted, degenerate configurations). The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string to_string(const Rational& q) {
  Int n = numerator(q), d = denominator(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

// Parses "num", "num/den", or a decimal like "-1.25". Throws Error on junk.
Rational rational_from_string(const std::string& text);

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

// p-adic order of n, n != 0.
int padic_order(Int n, const Int& p);

// ord_p(q) = ord_p(num) - ord_p(den); nullopt encodes +infinity (q = 0).
std::optional<Rational> padic_valuation(const Rational& q, const Int& p);

}  // namespace cubics
