#pragma once

#include "hamw/scalar.hpp"

namespace hamw {

// Exact sign of u + v*sqrt(5) for rationals u, v. Isolates the radical and
// compares squares, so bounds involving sqrt(5) stay decidable.
inline int sign_plus_sqrt5(const Rational& u, const Rational& v) {
  const int su = u.sign();
  const int sv = v.sign();
  if (su >= 0 && sv >= 0) return (su > 0 || sv > 0) ? 1 : 0;
  if (su <= 0 && sv <= 0) return -1;
  // Opposite signs: magnitude comparison of u^2 against 5 v^2.
  const Rational u2 = u * u;
  const Rational v2 = v * v * 5;
  if (u2 == v2) return 0;
  return (u2 > v2) ? su : sv;
}

}  // namespace hamw
