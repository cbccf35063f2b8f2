#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hamw/cycles.hpp"
#include "hamw/euler_identity.hpp"
#include "hamw/geometry.hpp"

namespace hamw {

// Five points listed in D-cycle order: points[k] and points[(k+1)%5] are
// joined by a D-segment, the remaining five pairs (distance 2 along the
// cycle) are the E-segments. d and e are the summed squared lengths.
template <Scalar S>
struct IterationState {
  std::size_t level = 1;
  std::array<Point<S>, 5> points;
  S d{};
  S e{};
};

// States for levels 1..N and, per level n, the residuals
//   A_n = 4 d_{n+1} - e_n                   (levels 1..N-1)
//   B_n = d_n + 4 e_{n+1} - 3 e_n           (levels 1..N-1)
//   C_n = e_{n+2} - (12/16) e_{n+1} + e_n/16 (levels 1..N-2)
template <Scalar S>
struct Trace {
  std::vector<IterationState<S>> states;
  std::vector<S> residual_a;
  std::vector<S> residual_b;
  std::vector<S> residual_c;

  // Residuals relative to the largest term they combine (float diagnostics).
  double relative_a(std::size_t i) const;
  double relative_b(std::size_t i) const;
  double relative_c(std::size_t i) const;
  double max_relative_residual() const;
  bool all_residuals_zero() const;
};

inline constexpr std::size_t kMaxIterationSteps = 200;

// Level-1 state for K_5 with E = e_cycle and D its complement. The points are
// translated so their centroid is the origin (a fixed point of `step`), which
// leaves every weight unchanged and keeps float precision as the points contract.
template <Scalar S>
IterationState<S> init_state(const Configuration<S>& c, const Cycle& e_cycle);

// Replace each point by the midpoint of its outgoing D-segment.
template <Scalar S>
IterationState<S> step(const IterationState<S>& s);

template <Scalar S>
Trace<S> trace(const Configuration<S>& c, const Cycle& e_cycle, std::size_t steps);

// Euler-identity terms for the five cyclic 4-subsets (v_i, v_{i+1}, v_{i+2},
// v_{i+3}) taken along the E-cycle, each labeled with the two D-segments
// v_i v_{i+2}, v_{i+1} v_{i+3} as the nonadjacent pair. Summed over i:
//   sum 4 r^2 = 4 e_2, sum (l5^2 + l6^2) = 2 d_1, sum rhs = 3 e_1 + d_1,
// which regroups to d_1 + 4 e_2 = 3 e_1.
template <Scalar S>
struct Decomposition {
  std::array<IdentityTerms<S>, 5> terms;
  S four_r2_minus_4e2{};          // sum 4 r_i^2 - 4 e_2
  S diagonals_minus_2d1{};        // sum (l5^2 + l6^2) - 2 d_1
  S cycles_minus_3e1_d1{};        // sum rhs - (3 e_1 + d_1)
  S core_residual{};              // d_1 + 4 e_2 - 3 e_1 from the aggregated sums
};

template <Scalar S>
Decomposition<S> five_tetrahedra_decomposition(const Configuration<S>& c, const Cycle& e_cycle);

extern template IterationState<double> init_state(const Configuration<double>&, const Cycle&);
extern template IterationState<Rational> init_state(const Configuration<Rational>&, const Cycle&);
extern template IterationState<double> step(const IterationState<double>&);
extern template IterationState<Rational> step(const IterationState<Rational>&);
extern template Trace<double> trace(const Configuration<double>&, const Cycle&, std::size_t);
extern template Trace<Rational> trace(const Configuration<Rational>&, const Cycle&, std::size_t);
extern template Decomposition<double> five_tetrahedra_decomposition(const Configuration<double>&, const Cycle&);
extern template Decomposition<Rational> five_tetrahedra_decomposition(const Configuration<Rational>&, const Cycle&);
extern template struct Trace<double>;
extern template struct Trace<Rational>;

}  // namespace hamw
