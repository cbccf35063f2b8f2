#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "hamw/cycles.hpp"
#include "hamw/geometry.hpp"
#include "hamw/verdict.hpp"

namespace hamw {

inline constexpr double kDefaultBoundTolerance = 1e-9;

// Closed-form extremes of w(E)/w(K_5) and their decimal approximations.
double theorem2_lower();  // (5 - sqrt5)/10
double theorem2_upper();  // (5 + sqrt5)/10

template <Scalar S>
struct BoundRow {
  Cycle cycle;
  S w_cycle{};       // w(E)
  S w_complement{};  // w(D)
  S w_total{};       // w(K_n)
  double ratio = 0.0;
  Verdict verdict = Verdict::Holds;
};

template <Scalar S>
struct BoundReport {
  std::vector<BoundRow<S>> rows;
  std::size_t trials = 1;
  std::size_t violations = 0;
  std::size_t degenerate = 0;
  std::size_t equalities = 0;
  double min_ratio = std::numeric_limits<double>::infinity();
  double max_ratio = -std::numeric_limits<double>::infinity();

  bool any_violation() const noexcept { return violations > 0; }
};

// 1/2 w(K4) <= w(E) < w(K4) for each of the three cycles. Float verdicts use
// `tolerance` relative to w(K4); exact mode decides equality and w(D) = 0
// exactly. A row with w(D) <= tol w(K4) is degenerate, not a violation.
template <Scalar S>
BoundReport<S> check_theorem1(const Configuration<S>& c, double tolerance = kDefaultBoundTolerance);

// (5-sqrt5)/10 <= w(E)/w(K5) <= (5+sqrt5)/10 for all twelve cycles; exact mode
// compares against sqrt5 without rounding.
template <Scalar S>
BoundReport<S> check_theorem2(const Configuration<S>& c, double tolerance = kDefaultBoundTolerance);

// Cycle/complement duality on K_5: ratio(E) + ratio(D) = 1 and E attains the
// lower extreme iff D attains the upper one.
struct DualityReport {
  std::size_t pairs_checked = 0;
  double max_sum_residual = 0.0;   // max |ratio(E) + ratio(D) - 1|
  bool sums_exact = true;          // exact mode: every sum equals 1 exactly
  bool extremes_paired = true;
  double min_ratio = 0.0;
  double max_ratio = 0.0;

  bool holds(double tolerance = kArithmeticTolerance) const noexcept {
    return sums_exact && extremes_paired && max_sum_residual <= tolerance;
  }
};

template <Scalar S>
DualityReport duality_check(const Configuration<S>& c, double tolerance = kDefaultBoundTolerance);

struct FuzzOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  std::size_t n = 5;
  std::size_t dim = 2;
  double tolerance = kDefaultBoundTolerance;
  std::size_t threads = 1;
  // Keep every row; otherwise only violated and degenerate rows are kept.
  bool keep_all_rows = false;
};

// Row plus the trial it came from.
template <Scalar S>
struct FuzzRow {
  std::size_t config_id = 0;
  BoundRow<S> row;
};

template <Scalar S>
struct FuzzReport {
  std::vector<FuzzRow<S>> rows;
  std::size_t trials = 0;
  std::size_t rows_checked = 0;
  std::size_t violations = 0;
  std::size_t degenerate = 0;
  std::size_t equalities = 0;
  double min_ratio = std::numeric_limits<double>::infinity();
  double max_ratio = -std::numeric_limits<double>::infinity();
};

// Trial i checks random_config(derive_seed(seed, i), n, dim). The report does
// not depend on `threads`.
template <Scalar S>
FuzzReport<S> fuzz(const FuzzOptions& options);

extern template BoundReport<double> check_theorem1(const Configuration<double>&, double);
extern template BoundReport<Rational> check_theorem1(const Configuration<Rational>&, double);
extern template BoundReport<double> check_theorem2(const Configuration<double>&, double);
extern template BoundReport<Rational> check_theorem2(const Configuration<Rational>&, double);
extern template DualityReport duality_check(const Configuration<double>&, double);
extern template DualityReport duality_check(const Configuration<Rational>&, double);
extern template FuzzReport<double> fuzz(const FuzzOptions&);
extern template FuzzReport<Rational> fuzz(const FuzzOptions&);

}  // namespace hamw
