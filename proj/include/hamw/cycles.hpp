#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamw/geometry.hpp"

namespace hamw {

// Hamiltonian cycle on K_n in canonical form: order[0] == 0 and
// order[1] < order[n-1]. Two cycles are the same tour iff they compare equal.
class Cycle {
 public:
  // Rotates and reflects any permutation of 0..n-1 into canonical form.
  static Cycle canonicalize(std::span<const std::size_t> vertex_sequence);
  static Cycle canonicalize(std::initializer_list<std::size_t> vertex_sequence) {
    return canonicalize(std::span<const std::size_t>(vertex_sequence.begin(), vertex_sequence.size()));
  }
  // Parses "0,2,4,1,3" (any rotation/reflection accepted).
  static Cycle parse(std::string_view text);
  static Cycle identity(std::size_t n);

  std::size_t size() const noexcept { return order_.size(); }
  const std::vector<std::size_t>& order() const noexcept { return order_; }
  std::size_t operator[](std::size_t i) const { return order_[i]; }

  // Comma-separated canonical vertex list.
  std::string to_string() const;

  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  explicit Cycle(std::vector<std::size_t> order) : order_(std::move(order)) {}
  std::vector<std::size_t> order_;
};

using Edge = std::pair<std::size_t, std::size_t>;  // first < second
using EdgeSet = std::set<Edge>;

EdgeSet cycle_edges(const Cycle& cycle);

// All (n-1)!/2 canonical cycles of K_n, 3 <= n <= 10, in lexicographic order.
std::vector<Cycle> enumerate_cycles(std::size_t n);

// The canonical cycle on the five pairs missing from `cycle`. K_5 only.
Cycle complement_cycle(const Cycle& cycle);

// Weight of the closed walk visiting `sequence` in order and returning.
template <Scalar S>
S closed_walk_weight(const Configuration<S>& c, std::span<const std::size_t> sequence);

template <Scalar S>
S cycle_weight(const Configuration<S>& c, const Cycle& cycle);

// w(K_n): the sum over all n(n-1)/2 pairs.
template <Scalar S>
S total_weight(const Configuration<S>& c);

template <Scalar S>
S complement_weight(const Configuration<S>& c, const Cycle& cycle);

extern template double closed_walk_weight(const Configuration<double>&, std::span<const std::size_t>);
extern template Rational closed_walk_weight(const Configuration<Rational>&, std::span<const std::size_t>);
extern template double cycle_weight(const Configuration<double>&, const Cycle&);
extern template Rational cycle_weight(const Configuration<Rational>&, const Cycle&);
extern template double total_weight(const Configuration<double>&);
extern template Rational total_weight(const Configuration<Rational>&);
extern template double complement_weight(const Configuration<double>&, const Cycle&);
extern template Rational complement_weight(const Configuration<Rational>&, const Cycle&);

}  // namespace hamw
