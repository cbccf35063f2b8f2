#include "hamw/sequences.hpp"

#include <cmath>
#include <string>

#include "hamw/surd.hpp"

namespace hamw {

namespace {

// (3 + sqrt5)/8 to double precision.
const double kRatioLimit = (3.0 + std::sqrt(5.0)) / 8.0;

}  // namespace

SequenceTable::SequenceTable(std::size_t last_index) {
  if (last_index < 2) throw UsageError("the sequence table needs at least a_0..a_2");
  terms_.reserve(last_index + 1);
  terms_.emplace_back(0);
  terms_.emplace_back(1);
  const Rational three_quarters(3, 4);
  const Rational sixteenth(1, 16);
  for (std::size_t n = 2; n <= last_index; ++n)
    terms_.push_back(three_quarters * terms_[n - 1] - sixteenth * terms_[n - 2]);
}

Rational SequenceTable::ratio(std::size_t n) const {
  if (n < 1 || n + 1 > last_index()) throw UsageError("ratio index out of range");
  return terms_[n + 1] / terms_[n];
}

Rational SequenceTable::bound(std::size_t n) const {
  if (n < 2 || n > last_index()) throw UsageError("B(n) needs 2 <= n <= " + std::to_string(last_index()));
  return Rational(3) - terms_[n - 1] / (Rational(4) * terms_[n]);
}

Rational SequenceTable::b(std::size_t n) const {
  if (n < 2 || n > last_index()) throw UsageError("b_n needs 2 <= n <= " + std::to_string(last_index()));
  return terms_[n - 2] / 16;
}

SequenceTable a_seq(std::size_t last_index) { return SequenceTable(last_index); }

Rational bound_expression(std::size_t n) {
  if (n < 2) throw UsageError("B(n) needs n >= 2");
  return SequenceTable(n).bound(n);
}

int bound_minus_limit_sign(const Rational& bound_value) {
  // B - (3 + sqrt5)/2 = (B - 3/2) + (-1/2) sqrt5
  return sign_plus_sqrt5(bound_value - Rational(3, 2), Rational(-1, 2));
}

Lemma1Report lemma1_checks(std::size_t N) {
  if (N < 3) throw UsageError("lemma1_checks needs N >= 3");
  const SequenceTable table(N + 2);
  Lemma1Report report;
  report.checked_through = N;
  const auto fail = [&report](std::size_t n) {
    if (!report.first_failure) report.first_failure = n;
  };
  for (std::size_t n = 1; n <= N; ++n) {
    const Rational& an = table.a(n);
    const Rational& an1 = table.a(n + 1);
    if (!(an.sign() > 0 && an1 < an)) {
      report.positive_and_decreasing = false;
      fail(n);
    }
    // a_{n+1}/a_n > (3 + sqrt5)/8  <=>  (8 a_{n+1} - 3 a_n) - a_n sqrt5 > 0  (a_n > 0)
    if (an.sign() <= 0 || sign_plus_sqrt5(Rational(8) * an1 - Rational(3) * an, -an) <= 0) {
      report.ratio_above_limit = false;
      fail(n);
    }
    // a_{n+2}/a_{n+1} <= a_{n+1}/a_n  <=>  a_{n+2} a_n <= a_{n+1}^2  (positive terms)
    if (!(table.a(n + 2) * an <= an1 * an1)) {
      report.ratio_non_increasing = false;
      fail(n);
    }
  }
  report.limit_gap = std::fabs(to_double(table.ratio(N)) - kRatioLimit);
  return report;
}

template <Scalar S>
S lemma2_residual(const Trace<S>& t, std::size_t n) {
  if (n < 2 || n > t.states.size()) throw UsageError("lemma2_residual: level out of range");
  const SequenceTable table(std::max<std::size_t>(n, 2));
  const S e1 = t.states[0].e;
  const S e2 = t.states[1].e;
  const S en = t.states[n - 1].e;
  S a_prev;
  S b_n;
  if constexpr (is_exact<S>) {
    a_prev = table.a(n - 1);
    b_n = table.b(n);
  } else {
    a_prev = to_double(table.a(n - 1));
    b_n = to_double(table.b(n));
  }
  return en - (a_prev * e2 - b_n * e1);
}

template <Scalar S>
double lemma2_relative_residual(const Trace<S>& t, std::size_t n) {
  const S residual = lemma2_residual(t, n);
  if (is_zero(residual)) return 0.0;
  const SequenceTable table(std::max<std::size_t>(n, 2));
  const double e1 = to_double(t.states[0].e);
  const double e2 = to_double(t.states[1].e);
  const double en = to_double(t.states[n - 1].e);
  return relative_residual(to_double(residual),
                           {en, to_double(table.a(n - 1)) * e2, to_double(table.b(n)) * e1});
}

template double lemma2_residual(const Trace<double>&, std::size_t);
template Rational lemma2_residual(const Trace<Rational>&, std::size_t);
template double lemma2_relative_residual(const Trace<double>&, std::size_t);
template double lemma2_relative_residual(const Trace<Rational>&, std::size_t);

}  // namespace hamw
