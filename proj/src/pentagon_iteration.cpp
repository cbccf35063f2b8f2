#include "hamw/pentagon_iteration.hpp"

#include <algorithm>
#include <string>

namespace hamw {

namespace {

template <Scalar S>
void measure(IterationState<S>& s) {
  s.d = S{0};
  s.e = S{0};
  for (std::size_t k = 0; k < 5; ++k) {
    s.d += squared_distance(s.points[k], s.points[(k + 1) % 5]);
    s.e += squared_distance(s.points[k], s.points[(k + 2) % 5]);
  }
}

template <Scalar S>
double relative_of(const S& residual, std::initializer_list<double> terms) {
  if constexpr (is_exact<S>) {
    if (is_zero(residual)) return 0.0;
  }
  return relative_residual(to_double(residual), terms);
}

}  // namespace

template <Scalar S>
IterationState<S> init_state(const Configuration<S>& c, const Cycle& e_cycle) {
  if (c.size() != 5 || e_cycle.size() != 5) throw UsageError("the midpoint iteration is defined on K_5 only");
  if (is_zero(total_weight(c))) throw DegenerateError("all five points coincide");
  const Cycle d_cycle = complement_cycle(e_cycle);

  const std::size_t dim = c.dim();
  Point<S> centroid = c[0];
  for (std::size_t i = 0; i < dim; ++i) {
    S sum{0};
    for (const auto& p : c.points()) sum += p[i];
    centroid[i] = sum / S{5};
  }

  IterationState<S> s;
  s.level = 1;
  for (std::size_t k = 0; k < 5; ++k) {
    Point<S> p = c[d_cycle[k]];
    for (std::size_t i = 0; i < dim; ++i) p[i] -= centroid[i];
    s.points[k] = p;
  }
  measure(s);
  return s;
}

template <Scalar S>
IterationState<S> step(const IterationState<S>& s) {
  IterationState<S> next;
  next.level = s.level + 1;
  for (std::size_t k = 0; k < 5; ++k) next.points[k] = midpoint(s.points[k], s.points[(k + 1) % 5]);
  measure(next);
  return next;
}

template <Scalar S>
Trace<S> trace(const Configuration<S>& c, const Cycle& e_cycle, std::size_t steps) {
  if (steps < 1 || steps > kMaxIterationSteps)
    throw UsageError("steps must be between 1 and " + std::to_string(kMaxIterationSteps));
  Trace<S> t;
  t.states.reserve(steps + 1);
  t.states.push_back(init_state(c, e_cycle));
  for (std::size_t i = 0; i < steps; ++i) t.states.push_back(step(t.states.back()));

  const S three_quarters = S{12} / S{16};
  const S sixteenth = S{1} / S{16};
  const auto& st = t.states;
  for (std::size_t i = 0; i + 1 < st.size(); ++i) {
    t.residual_a.push_back(S{4} * st[i + 1].d - st[i].e);
    t.residual_b.push_back(st[i].d + S{4} * st[i + 1].e - S{3} * st[i].e);
  }
  for (std::size_t i = 0; i + 2 < st.size(); ++i)
    t.residual_c.push_back(st[i + 2].e - three_quarters * st[i + 1].e + sixteenth * st[i].e);
  return t;
}

template <Scalar S>
double Trace<S>::relative_a(std::size_t i) const {
  return relative_of(residual_a[i], {4.0 * to_double(states[i + 1].d), to_double(states[i].e)});
}

template <Scalar S>
double Trace<S>::relative_b(std::size_t i) const {
  return relative_of(residual_b[i],
                     {to_double(states[i].d), 4.0 * to_double(states[i + 1].e), 3.0 * to_double(states[i].e)});
}

template <Scalar S>
double Trace<S>::relative_c(std::size_t i) const {
  return relative_of(residual_c[i], {to_double(states[i + 2].e), 0.75 * to_double(states[i + 1].e),
                                     to_double(states[i].e) / 16.0});
}

template <Scalar S>
double Trace<S>::max_relative_residual() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < residual_a.size(); ++i) worst = std::max({worst, relative_a(i), relative_b(i)});
  for (std::size_t i = 0; i < residual_c.size(); ++i) worst = std::max(worst, relative_c(i));
  return worst;
}

template <Scalar S>
bool Trace<S>::all_residuals_zero() const {
  const auto zero = [](const S& x) { return is_zero(x); };
  return std::all_of(residual_a.begin(), residual_a.end(), zero) &&
         std::all_of(residual_b.begin(), residual_b.end(), zero) &&
         std::all_of(residual_c.begin(), residual_c.end(), zero);
}

template <Scalar S>
Decomposition<S> five_tetrahedra_decomposition(const Configuration<S>& c, const Cycle& e_cycle) {
  if (c.size() != 5 || e_cycle.size() != 5) throw UsageError("the five-tetrahedra decomposition needs K_5");
  Decomposition<S> out;
  S sum_4r2{0};
  S sum_diagonals{0};
  S sum_rhs{0};
  for (std::size_t i = 0; i < 5; ++i) {
    const std::array<Point<S>, 4> quad{c[e_cycle[i]], c[e_cycle[(i + 1) % 5]], c[e_cycle[(i + 2) % 5]],
                                       c[e_cycle[(i + 3) % 5]]};
    out.terms[i] = identity_terms(QuadLabeling<S>(quad, 0));
    sum_4r2 += S{4} * out.terms[i].r2;
    sum_diagonals += out.terms[i].l2[4] + out.terms[i].l2[5];
    sum_rhs += out.terms[i].rhs;
  }

  const auto first = init_state(c, e_cycle);
  const auto second = step(first);
  out.four_r2_minus_4e2 = sum_4r2 - S{4} * second.e;
  out.diagonals_minus_2d1 = sum_diagonals - S{2} * first.d;
  out.cycles_minus_3e1_d1 = sum_rhs - (S{3} * first.e + first.d);

  // Aggregated quantities: d_1 from the diagonals, e_2 from the r-terms, and
  // e_1 from the 4-cycle sums once d_1 is removed.
  const S d1 = sum_diagonals / S{2};
  const S e2 = sum_4r2 / S{4};
  const S e1 = (sum_rhs - d1) / S{3};
  out.core_residual = d1 + S{4} * e2 - S{3} * e1;
  return out;
}

template IterationState<double> init_state(const Configuration<double>&, const Cycle&);
template IterationState<Rational> init_state(const Configuration<Rational>&, const Cycle&);
template IterationState<double> step(const IterationState<double>&);
template IterationState<Rational> step(const IterationState<Rational>&);
template Trace<double> trace(const Configuration<double>&, const Cycle&, std::size_t);
template Trace<Rational> trace(const Configuration<Rational>&, const Cycle&, std::size_t);
template Decomposition<double> five_tetrahedra_decomposition(const Configuration<double>&, const Cycle&);
template Decomposition<Rational> five_tetrahedra_decomposition(const Configuration<Rational>&, const Cycle&);
template struct Trace<double>;
template struct Trace<Rational>;

}  // namespace hamw
