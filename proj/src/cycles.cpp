#include "hamw/cycles.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>

namespace hamw {

Cycle Cycle::canonicalize(std::span<const std::size_t> seq) {
  const std::size_t n = seq.size();
  if (n < 3) throw UsageError("a Hamiltonian cycle needs at least 3 vertices");
  std::vector<bool> seen(n, false);
  for (std::size_t v : seq) {
    if (v >= n || seen[v]) throw UsageError("cycle is not a permutation of 0.." + std::to_string(n - 1));
    seen[v] = true;
  }
  const auto start = static_cast<std::size_t>(std::find(seq.begin(), seq.end(), 0) - seq.begin());
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = seq[(start + i) % n];
  if (order[1] > order[n - 1]) std::reverse(order.begin() + 1, order.end());
  return Cycle(std::move(order));
}

Cycle Cycle::parse(std::string_view text) {
  std::vector<std::size_t> seq;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto field = text.substr(0, comma);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size())
      throw UsageError("bad cycle vertex '" + std::string(field) + "'");
    seq.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return canonicalize(seq);
}

Cycle Cycle::identity(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return canonicalize(order);
}

std::string Cycle::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(order_[i]);
  }
  return s;
}

EdgeSet cycle_edges(const Cycle& cycle) {
  EdgeSet edges;
  const std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = cycle[i];
    const std::size_t b = cycle[(i + 1) % n];
    edges.emplace(std::min(a, b), std::max(a, b));
  }
  return edges;
}

std::vector<Cycle> enumerate_cycles(std::size_t n) {
  if (n < 3 || n > 10) throw UsageError("cycle enumeration supports 3 <= n <= 10");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<Cycle> cycles;
  // Fix vertex 0 first and keep one orientation of each tour.
  do {
    if (perm[1] < perm[n - 1]) cycles.push_back(Cycle::canonicalize(perm));
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return cycles;
}

Cycle complement_cycle(const Cycle& cycle) {
  if (cycle.size() != 5)
    throw UsageError("the complement of a Hamiltonian cycle is Hamiltonian only on K_5");
  const EdgeSet used = cycle_edges(cycle);
  std::array<std::vector<std::size_t>, 5> adjacent;
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a + 1; b < 5; ++b)
      if (!used.contains({a, b})) {
        adjacent[a].push_back(b);
        adjacent[b].push_back(a);
      }
  std::vector<std::size_t> walk{0};
  std::size_t prev = 0;
  std::size_t cur = adjacent[0][0];
  while (cur != 0) {
    walk.push_back(cur);
    const std::size_t next = adjacent[cur][0] == prev ? adjacent[cur][1] : adjacent[cur][0];
    prev = cur;
    cur = next;
  }
  return Cycle::canonicalize(walk);
}

template <Scalar S>
S closed_walk_weight(const Configuration<S>& c, std::span<const std::size_t> sequence) {
  if (sequence.size() != c.size())
    throw UsageError("cycle has " + std::to_string(sequence.size()) + " vertices but configuration has " +
                     std::to_string(c.size()) + " points");
  S sum{0};
  const std::size_t n = sequence.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (sequence[i] >= n) throw UsageError("cycle vertex out of range");
    sum += squared_distance(c[sequence[i]], c[sequence[(i + 1) % n]]);
  }
  return sum;
}

template <Scalar S>
S cycle_weight(const Configuration<S>& c, const Cycle& cycle) {
  return closed_walk_weight(c, std::span<const std::size_t>(cycle.order()));
}

template <Scalar S>
S total_weight(const Configuration<S>& c) {
  S sum{0};
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) sum += squared_distance(c[i], c[j]);
  return sum;
}

template <Scalar S>
S complement_weight(const Configuration<S>& c, const Cycle& cycle) {
  if (cycle.size() != c.size()) throw UsageError("cycle and configuration sizes differ");
  // Summed directly over the non-cycle pairs; in exact mode this equals
  // total_weight - cycle_weight, and in float mode it avoids cancellation.
  const EdgeSet on_cycle = cycle_edges(cycle);
  S sum{0};
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!on_cycle.contains({i, j})) sum += squared_distance(c[i], c[j]);
  return sum;
}

template double closed_walk_weight(const Configuration<double>&, std::span<const std::size_t>);
template Rational closed_walk_weight(const Configuration<Rational>&, std::span<const std::size_t>);
template double cycle_weight(const Configuration<double>&, const Cycle&);
template Rational cycle_weight(const Configuration<Rational>&, const Cycle&);
template double total_weight(const Configuration<double>&);
template Rational total_weight(const Configuration<Rational>&);
template double complement_weight(const Configuration<double>&, const Cycle&);
template Rational complement_weight(const Configuration<Rational>&, const Cycle&);

}  // namespace hamw
