#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hamw/pentagon_iteration.hpp"
#include "hamw/scalar.hpp"

namespace hamw {

// a_0 = 0, a_1 = 1, a_{n+2} = (12/16) a_{n+1} - (1/16) a_n, kept exact.
class SequenceTable {
 public:
  explicit SequenceTable(std::size_t last_index);

  std::size_t last_index() const noexcept { return terms_.size() - 1; }
  const Rational& a(std::size_t n) const { return terms_.at(n); }
  // a_{n+1} / a_n, n >= 1 and n + 1 <= last_index().
  Rational ratio(std::size_t n) const;
  // B(n) = 3 - a_{n-1} / (4 a_n), 2 <= n <= last_index().
  Rational bound(std::size_t n) const;
  // Lemma-2 coefficient b_n = a_{n-2} / 16, n >= 2.
  Rational b(std::size_t n) const;

 private:
  std::vector<Rational> terms_;
};

SequenceTable a_seq(std::size_t last_index);

// B(n) on its own table.
Rational bound_expression(std::size_t n);

// Exact checks over 1 <= n <= N:
//   (i)   a_n > 0 and a_{n+1} < a_n
//   (ii)  a_{n+1}/a_n > (3 + sqrt5)/8, decided exactly with sqrt5 isolated
//   (iii) a_{n+2}/a_{n+1} <= a_{n+1}/a_n
// plus |a_{N+1}/a_N - (3 + sqrt5)/8| in floating point.
struct Lemma1Report {
  std::size_t checked_through = 0;
  bool positive_and_decreasing = true;
  bool ratio_above_limit = true;
  bool ratio_non_increasing = true;
  std::optional<std::size_t> first_failure;
  double limit_gap = 0.0;

  bool all_hold() const noexcept { return positive_and_decreasing && ratio_above_limit && ratio_non_increasing; }
};

Lemma1Report lemma1_checks(std::size_t N);

// Sign of B(n) - (3 + sqrt5)/2, exact. Positive for every n >= 2.
int bound_minus_limit_sign(const Rational& bound_value);

// e_n - (a_{n-1} e_2 - (a_{n-2}/16) e_1) on a trace (levels are 1-based).
template <Scalar S>
S lemma2_residual(const Trace<S>& t, std::size_t n);

// Same residual relative to the largest of the three terms.
template <Scalar S>
double lemma2_relative_residual(const Trace<S>& t, std::size_t n);

extern template double lemma2_residual(const Trace<double>&, std::size_t);
extern template Rational lemma2_residual(const Trace<Rational>&, std::size_t);
extern template double lemma2_relative_residual(const Trace<double>&, std::size_t);
extern template double lemma2_relative_residual(const Trace<Rational>&, std::size_t);

}  // namespace hamw
