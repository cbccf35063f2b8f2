#pragma once

#include <array>
#include <cstddef>

#include "hamw/geometry.hpp"
#include "hamw/verdict.hpp"

namespace hamw {

// Four points plus a choice of which two disjoint segments form the
// nonadjacent pair (l5, l6); the other four segments form the 4-cycle l1..l4.
//
//   pairing 0: cycle P0 P1 P2 P3, nonadjacent pair P0P2, P1P3
//   pairing 1: cycle P0 P2 P1 P3, nonadjacent pair P0P1, P2P3
//   pairing 2: cycle P0 P1 P3 P2, nonadjacent pair P0P3, P1P2
//
// With the cycle written c0 c1 c2 c3: l1 = c0c1, l2 = c1c2, l3 = c2c3,
// l4 = c3c0, l5 = c0c2, l6 = c1c3, and L_k is the midpoint of segment k.
template <Scalar S>
class QuadLabeling {
 public:
  QuadLabeling(std::array<Point<S>, 4> points, int pairing);

  const std::array<Point<S>, 4>& points() const noexcept { return points_; }
  int pairing() const noexcept { return pairing_; }
  // Indices into points() in 4-cycle order.
  std::array<std::size_t, 4> cycle_order() const noexcept;
  // Endpoints of segment k (0-based, i.e. l_{k+1}).
  std::array<std::size_t, 2> segment(std::size_t k) const noexcept;
  // L_{k+1}.
  Point<S> segment_midpoint(std::size_t k) const;

 private:
  std::array<Point<S>, 4> points_;
  int pairing_;
};

template <Scalar S>
struct IdentityTerms {
  std::array<S, 6> l2{};  // l1^2 .. l6^2
  S p2{};                 // |L1 L3|^2
  S q2{};                 // |L2 L4|^2
  S r2{};                 // |L5 L6|^2
  S lhs{};                // 4 r^2 + l5^2 + l6^2
  S rhs{};                // l1^2 + l2^2 + l3^2 + l4^2
  S residual{};           // lhs - rhs
};

template <Scalar S>
IdentityTerms<S> identity_terms(const QuadLabeling<S>& quad);

// Residuals of the three Varignon-parallelogram relations:
//   (l5^2 + l6^2)/2 - (p^2 + q^2), (l1^2 + l3^2)/2 - (q^2 + r^2), (l2^2 + l4^2)/2 - (p^2 + r^2)
template <Scalar S>
std::array<S, 3> midpoint_parallelogram_relations(const QuadLabeling<S>& quad);

// Midsegment relations 4|L_a L_b|^2 - l_k^2. `primary` holds
// 4|L2L5|^2 - l1^2, 4|L1L5|^2 - l2^2, 4|L2L6|^2 - l3^2, 4|L1L6|^2 - l4^2,
// 4|L1L2|^2 - l5^2, 4|L1L4|^2 - l6^2; `mirrored` the companion equalities
// 4|L4L6|^2 - l1^2, 4|L3L6|^2 - l2^2, 4|L4L5|^2 - l3^2, 4|L3L5|^2 - l4^2,
// 4|L3L4|^2 - l5^2, 4|L2L3|^2 - l6^2.
template <Scalar S>
struct MidsegmentResiduals {
  std::array<S, 6> primary{};
  std::array<S, 6> mirrored{};
};

template <Scalar S>
MidsegmentResiduals<S> midsegment_relations(const QuadLabeling<S>& quad);

template <Scalar S>
struct IdentityReport {
  IdentityTerms<S> terms;
  Verdict verdict = Verdict::Holds;
  // |residual| / (1 + |lhs| + |rhs|); 0 in exact mode when the identity holds.
  double normalized_residual = 0.0;
  double tolerance = 0.0;
};

// Holds iff |residual| <= tolerance * (1 + |lhs| + |rhs|) in float mode, or
// residual == 0 in exact mode (tolerance is then ignored).
template <Scalar S>
IdentityReport<S> verify_identity(const QuadLabeling<S>& quad, double tolerance);

extern template class QuadLabeling<double>;
extern template class QuadLabeling<Rational>;
extern template IdentityTerms<double> identity_terms(const QuadLabeling<double>&);
extern template IdentityTerms<Rational> identity_terms(const QuadLabeling<Rational>&);
extern template std::array<double, 3> midpoint_parallelogram_relations(const QuadLabeling<double>&);
extern template std::array<Rational, 3> midpoint_parallelogram_relations(const QuadLabeling<Rational>&);
extern template MidsegmentResiduals<double> midsegment_relations(const QuadLabeling<double>&);
extern template MidsegmentResiduals<Rational> midsegment_relations(const QuadLabeling<Rational>&);
extern template IdentityReport<double> verify_identity(const QuadLabeling<double>&, double);
extern template IdentityReport<Rational> verify_identity(const QuadLabeling<Rational>&, double);

}  // namespace hamw
