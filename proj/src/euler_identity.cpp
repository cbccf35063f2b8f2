#include "hamw/euler_identity.hpp"

#include <string>

namespace hamw {

namespace {

constexpr std::array<std::array<std::size_t, 4>, 3> kCycleOrders{{
    {0, 1, 2, 3},
    {0, 2, 1, 3},
    {0, 1, 3, 2},
}};

}  // namespace

template <Scalar S>
QuadLabeling<S>::QuadLabeling(std::array<Point<S>, 4> points, int pairing)
    : points_(std::move(points)), pairing_(pairing) {
  if (pairing < 0 || pairing > 2) throw UsageError("pairing must be 0, 1 or 2, got " + std::to_string(pairing));
  for (const auto& p : points_)
    if (p.dim() != points_[0].dim()) throw UsageError("all four points must share one dimension");
  if (points_[0].dim() != 2 && points_[0].dim() != 3) throw UsageError("dimension must be 2 or 3");
}

template <Scalar S>
std::array<std::size_t, 4> QuadLabeling<S>::cycle_order() const noexcept {
  return kCycleOrders[static_cast<std::size_t>(pairing_)];
}

template <Scalar S>
std::array<std::size_t, 2> QuadLabeling<S>::segment(std::size_t k) const noexcept {
  const auto c = cycle_order();
  switch (k) {
    case 0: return {c[0], c[1]};
    case 1: return {c[1], c[2]};
    case 2: return {c[2], c[3]};
    case 3: return {c[3], c[0]};
    case 4: return {c[0], c[2]};
    default: return {c[1], c[3]};
  }
}

template <Scalar S>
Point<S> QuadLabeling<S>::segment_midpoint(std::size_t k) const {
  const auto [a, b] = segment(k);
  return midpoint(points_[a], points_[b]);
}

template <Scalar S>
IdentityTerms<S> identity_terms(const QuadLabeling<S>& quad) {
  IdentityTerms<S> t;
  const auto& pts = quad.points();
  std::array<Point<S>, 6> mids;
  for (std::size_t k = 0; k < 6; ++k) {
    const auto [a, b] = quad.segment(k);
    t.l2[k] = squared_distance(pts[a], pts[b]);
    mids[k] = quad.segment_midpoint(k);
  }
  t.p2 = squared_distance(mids[0], mids[2]);
  t.q2 = squared_distance(mids[1], mids[3]);
  t.r2 = squared_distance(mids[4], mids[5]);
  t.lhs = S{4} * t.r2 + t.l2[4] + t.l2[5];
  t.rhs = t.l2[0] + t.l2[1] + t.l2[2] + t.l2[3];
  t.residual = t.lhs - t.rhs;
  return t;
}

template <Scalar S>
std::array<S, 3> midpoint_parallelogram_relations(const QuadLabeling<S>& quad) {
  const auto t = identity_terms(quad);
  const S half{S{1} / S{2}};
  return {
      half * (t.l2[4] + t.l2[5]) - (t.p2 + t.q2),
      half * (t.l2[0] + t.l2[2]) - (t.q2 + t.r2),
      half * (t.l2[1] + t.l2[3]) - (t.p2 + t.r2),
  };
}

template <Scalar S>
MidsegmentResiduals<S> midsegment_relations(const QuadLabeling<S>& quad) {
  const auto& pts = quad.points();
  std::array<S, 6> l2;
  std::array<Point<S>, 6> mid;
  for (std::size_t k = 0; k < 6; ++k) {
    const auto [a, b] = quad.segment(k);
    l2[k] = squared_distance(pts[a], pts[b]);
    mid[k] = quad.segment_midpoint(k);
  }
  // Pairs of midpoint indices (0-based L_k) whose distance is half of l_k.
  constexpr std::array<std::array<std::size_t, 2>, 6> primary{{{1, 4}, {0, 4}, {1, 5}, {0, 5}, {0, 1}, {0, 3}}};
  constexpr std::array<std::array<std::size_t, 2>, 6> mirrored{{{3, 5}, {2, 5}, {3, 4}, {2, 4}, {2, 3}, {1, 2}}};
  MidsegmentResiduals<S> r;
  for (std::size_t k = 0; k < 6; ++k) {
    r.primary[k] = S{4} * squared_distance(mid[primary[k][0]], mid[primary[k][1]]) - l2[k];
    r.mirrored[k] = S{4} * squared_distance(mid[mirrored[k][0]], mid[mirrored[k][1]]) - l2[k];
  }
  return r;
}

template <Scalar S>
IdentityReport<S> verify_identity(const QuadLabeling<S>& quad, double tolerance) {
  if constexpr (!is_exact<S>) {
    if (!(tolerance > 0.0)) throw UsageError("tolerance must be positive");
  }
  IdentityReport<S> report;
  report.terms = identity_terms(quad);
  report.tolerance = tolerance;
  const double lhs = to_double(report.terms.lhs);
  const double rhs = to_double(report.terms.rhs);
  if constexpr (is_exact<S>) {
    const bool exact = is_zero(report.terms.residual);
    report.normalized_residual = exact ? 0.0 : normalized_residual(to_double(report.terms.residual), std::fabs(lhs) + std::fabs(rhs));
    report.verdict = exact ? Verdict::Holds : Verdict::Violated;
  } else {
    report.normalized_residual = normalized_residual(report.terms.residual, std::fabs(lhs) + std::fabs(rhs));
    report.verdict = report.normalized_residual <= tolerance ? Verdict::Holds : Verdict::Violated;
  }
  return report;
}

template class QuadLabeling<double>;
template class QuadLabeling<Rational>;
template IdentityTerms<double> identity_terms(const QuadLabeling<double>&);
template IdentityTerms<Rational> identity_terms(const QuadLabeling<Rational>&);
template std::array<double, 3> midpoint_parallelogram_relations(const QuadLabeling<double>&);
template std::array<Rational, 3> midpoint_parallelogram_relations(const QuadLabeling<Rational>&);
template MidsegmentResiduals<double> midsegment_relations(const QuadLabeling<double>&);
template MidsegmentResiduals<Rational> midsegment_relations(const QuadLabeling<Rational>&);
template IdentityReport<double> verify_identity(const QuadLabeling<double>&, double);
template IdentityReport<Rational> verify_identity(const QuadLabeling<Rational>&, double);

}  // namespace hamw
