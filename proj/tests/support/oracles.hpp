#pragma once

// Independent oracles. None of these call into the code paths they check.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hamw/geometry.hpp"

namespace hamw::testing {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

// a_n = (r+^n - r-^n) / (r+ - r-), r+- = (3 +- sqrt5)/8, the roots of
// x^2 = (12/16) x - 1/16, evaluated in 50 significant digits.
inline HighPrecision closed_form_a(unsigned n) {
  const HighPrecision root5 = boost::multiprecision::sqrt(HighPrecision(5));
  const HighPrecision plus = (3 + root5) / 8;
  const HighPrecision minus = (3 - root5) / 8;
  return (boost::multiprecision::pow(plus, n) - boost::multiprecision::pow(minus, n)) / (plus - minus);
}

// Number of distinct undirected Hamiltonian cycles of K_n, counted as
// distinct edge sets over all n! vertex orders.
inline std::set<std::set<std::pair<std::size_t, std::size_t>>> brute_force_cycle_edge_sets(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::set<std::set<std::pair<std::size_t, std::size_t>>> out;
  do {
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
      const auto a = perm[i];
      const auto b = perm[(i + 1) % n];
      edges.emplace(std::min(a, b), std::max(a, b));
    }
    out.insert(edges);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// w(K_n) via n * sum |p_i - centroid|^2, exact.
inline Rational centroid_total_weight(const ExactConfiguration& c) {
  const std::size_t n = c.size();
  Rational spread{0};
  for (std::size_t i = 0; i < c.dim(); ++i) {
    Rational mean{0};
    for (const auto& p : c.points()) mean += p[i];
    mean /= static_cast<long>(n);
    for (const auto& p : c.points()) spread += (p[i] - mean) * (p[i] - mean);
  }
  return spread * static_cast<long>(n);
}

}  // namespace hamw::testing
