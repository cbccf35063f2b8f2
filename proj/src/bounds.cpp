#include "hamw/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "hamw/parallel.hpp"
#include "hamw/splitmix64.hpp"
#include "hamw/surd.hpp"

namespace hamw {

double theorem2_lower() { return (5.0 - std::sqrt(5.0)) / 10.0; }
double theorem2_upper() { return (5.0 + std::sqrt(5.0)) / 10.0; }

namespace {

template <Scalar S>
BoundRow<S> make_row(const Configuration<S>& c, const Cycle& cycle, const S& total) {
  BoundRow<S> row{cycle, cycle_weight(c, cycle), complement_weight(c, cycle), total, 0.0, Verdict::Holds};
  if (!is_zero(total)) {
    if constexpr (is_exact<S>)
      row.ratio = to_double(Rational(row.w_cycle / total));
    else
      row.ratio = row.w_cycle / total;
  }
  return row;
}

template <Scalar S>
void tally(BoundReport<S>& report) {
  for (const auto& row : report.rows) {
    switch (row.verdict) {
      case Verdict::Violated: ++report.violations; break;
      case Verdict::Degenerate: ++report.degenerate; break;
      case Verdict::HoldsWithEquality: ++report.equalities; break;
      case Verdict::Holds: break;
    }
    if (!is_zero(row.w_total)) {
      report.min_ratio = std::min(report.min_ratio, row.ratio);
      report.max_ratio = std::max(report.max_ratio, row.ratio);
    }
  }
}

template <Scalar S>
Verdict theorem1_verdict(const BoundRow<S>& row, double tol) {
  if (is_zero(row.w_total)) return Verdict::Degenerate;
  if constexpr (is_exact<S>) {
    const Rational twice = row.w_cycle * 2;
    if (twice < row.w_total) return Verdict::Violated;
    if (is_zero(row.w_complement)) return Verdict::Degenerate;
    if (twice == row.w_total) return Verdict::HoldsWithEquality;
    return Verdict::Holds;
  } else {
    const double w = row.w_total;
    if (row.w_cycle < 0.5 * w - tol * w) return Verdict::Violated;
    if (row.w_cycle > w + tol * w) return Verdict::Violated;
    if (row.w_complement <= tol * w) return Verdict::Degenerate;
    if (std::fabs(row.w_cycle - 0.5 * w) <= tol * w) return Verdict::HoldsWithEquality;
    return Verdict::Holds;
  }
}

template <Scalar S>
Verdict theorem2_verdict(const BoundRow<S>& row, double tol) {
  if (is_zero(row.w_total)) return Verdict::Degenerate;
  if constexpr (is_exact<S>) {
    const Rational ten_e = row.w_cycle * 10;
    const Rational five_k = row.w_total * 5;
    // 10 w(E) - 5 w(K) + sqrt5 w(K) >= 0 and 5 w(K) - 10 w(E) + sqrt5 w(K) >= 0
    const int lower = sign_plus_sqrt5(ten_e - five_k, row.w_total);
    const int upper = sign_plus_sqrt5(five_k - ten_e, row.w_total);
    if (lower < 0 || upper < 0) return Verdict::Violated;
    if (lower == 0 || upper == 0) return Verdict::HoldsWithEquality;
    return Verdict::Holds;
  } else {
    const double lo = theorem2_lower();
    const double hi = theorem2_upper();
    if (row.ratio < lo - tol || row.ratio > hi + tol) return Verdict::Violated;
    if (std::fabs(row.ratio - lo) <= tol || std::fabs(row.ratio - hi) <= tol) return Verdict::HoldsWithEquality;
    return Verdict::Holds;
  }
}

template <Scalar S>
BoundReport<S> check_all_cycles(const Configuration<S>& c, double tolerance, Verdict (*judge)(const BoundRow<S>&, double)) {
  if constexpr (!is_exact<S>) {
    if (!(tolerance > 0.0)) throw UsageError("tolerance must be positive");
  }
  BoundReport<S> report;
  const S total = total_weight(c);
  for (const auto& cycle : enumerate_cycles(c.size())) {
    auto row = make_row(c, cycle, total);
    row.verdict = judge(row, tolerance);
    report.rows.push_back(std::move(row));
  }
  tally(report);
  return report;
}

}  // namespace

template <Scalar S>
BoundReport<S> check_theorem1(const Configuration<S>& c, double tolerance) {
  if (c.size() != 4) throw UsageError("the K_4 bound needs exactly 4 points");
  return check_all_cycles<S>(c, tolerance, &theorem1_verdict<S>);
}

template <Scalar S>
BoundReport<S> check_theorem2(const Configuration<S>& c, double tolerance) {
  if (c.size() != 5) throw UsageError("the K_5 bound needs exactly 5 points");
  return check_all_cycles<S>(c, tolerance, &theorem2_verdict<S>);
}

template <Scalar S>
DualityReport duality_check(const Configuration<S>& c, double tolerance) {
  if (c.size() != 5) throw UsageError("cycle/complement duality needs exactly 5 points");
  const S total = total_weight(c);
  if (is_zero(total)) throw DegenerateError("all five points coincide");
  const auto report = check_theorem2(c, tolerance);
  DualityReport out;
  out.min_ratio = report.min_ratio;
  out.max_ratio = report.max_ratio;
  const double lo = theorem2_lower();
  const double hi = theorem2_upper();
  for (const auto& row : report.rows) {
    const auto partner = std::find_if(report.rows.begin(), report.rows.end(),
                                      [&](const auto& r) { return r.cycle == complement_cycle(row.cycle); });
    ++out.pairs_checked;
    if constexpr (is_exact<S>) {
      if (row.w_cycle + partner->w_cycle != total) out.sums_exact = false;
    }
    out.max_sum_residual = std::max(out.max_sum_residual, std::fabs(row.ratio + partner->ratio - 1.0));

    bool attains_lower = false;
    bool partner_attains_upper = false;
    if constexpr (is_exact<S>) {
      attains_lower = sign_plus_sqrt5(row.w_cycle * 10 - total * 5, total) == 0;
      partner_attains_upper = sign_plus_sqrt5(total * 5 - partner->w_cycle * 10, total) == 0;
    } else {
      attains_lower = std::fabs(row.ratio - lo) <= tolerance;
      partner_attains_upper = std::fabs(partner->ratio - hi) <= tolerance;
    }
    if (attains_lower != partner_attains_upper) out.extremes_paired = false;
  }
  return out;
}

template <Scalar S>
FuzzReport<S> fuzz(const FuzzOptions& options) {
  if (options.trials < 1) throw UsageError("fuzz needs at least one trial");
  if (options.n != 4 && options.n != 5) throw UsageError("bound fuzzing supports n = 4 or n = 5");

  std::vector<BoundReport<S>> per_trial(options.trials);
  parallel_for(options.trials, options.threads, [&](std::size_t i) {
    const auto config = random_config(derive_seed(options.seed, i), options.n, options.dim);
    if constexpr (is_exact<S>) {
      const auto exact = to_exact(config);
      per_trial[i] = options.n == 4 ? check_theorem1(exact, options.tolerance) : check_theorem2(exact, options.tolerance);
    } else {
      per_trial[i] = options.n == 4 ? check_theorem1(config, options.tolerance) : check_theorem2(config, options.tolerance);
    }
  });

  FuzzReport<S> out;
  out.trials = options.trials;
  for (std::size_t i = 0; i < per_trial.size(); ++i) {
    auto& trial = per_trial[i];
    out.rows_checked += trial.rows.size();
    out.violations += trial.violations;
    out.degenerate += trial.degenerate;
    out.equalities += trial.equalities;
    out.min_ratio = std::min(out.min_ratio, trial.min_ratio);
    out.max_ratio = std::max(out.max_ratio, trial.max_ratio);
    for (auto& row : trial.rows)
      if (options.keep_all_rows || row.verdict == Verdict::Violated || row.verdict == Verdict::Degenerate)
        out.rows.push_back({i, std::move(row)});
  }
  return out;
}

template BoundReport<double> check_theorem1(const Configuration<double>&, double);
template BoundReport<Rational> check_theorem1(const Configuration<Rational>&, double);
template BoundReport<double> check_theorem2(const Configuration<double>&, double);
template BoundReport<Rational> check_theorem2(const Configuration<Rational>&, double);
template DualityReport duality_check(const Configuration<double>&, double);
template DualityReport duality_check(const Configuration<Rational>&, double);
template FuzzReport<double> fuzz(const FuzzOptions&);
template FuzzReport<Rational> fuzz(const FuzzOptions&);

}  // namespace hamw
