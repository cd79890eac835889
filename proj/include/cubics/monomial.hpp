#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace cubics {

inline constexpr int kNumVars = 4;
inline constexpr char kVarNames[kNumVars] = {'x', 'y', 'z', 'w'};

// Exponent vector for x, y, z, w.
struct Monomial {
  std::array<int, kNumVars> e{0, 0, 0, 0};

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }

  bool operator==(const Monomial&) const = default;

  std::string str() const;
};

// Graded lexicographic with x > y > z > w, descending: higher degree first,
// then lexicographically larger exponent vector first. Used for term storage
// so printing is deterministic.
struct GradedLexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.e > b.e;
  }
};

}  // namespace cubics
