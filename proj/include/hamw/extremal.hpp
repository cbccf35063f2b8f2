#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "hamw/cycles.hpp"
#include "hamw/geometry.hpp"

namespace hamw {

enum class Objective { Maximize, Minimize };

std::string_view objective_name(Objective o);
Objective parse_objective(std::string_view text);

// w(E)/w(K_n). Throws DegenerateError when w(K_n) = 0.
double ratio(const FloatConfiguration& c, const Cycle& cycle);

// Proven range of w(E)/w(K_n), for n = 4 and n = 5.
struct ProvenBound {
  double lower = 0.0;
  double upper = 0.0;
  bool upper_attained = true;
};

std::optional<ProvenBound> proven_bound(std::size_t n);

struct OptimizeOptions {
  std::uint64_t seed = 0;
  std::size_t n = 5;
  std::size_t dim = 2;
  Objective objective = Objective::Maximize;
  std::size_t restarts = 20;
  std::size_t budget = 500;  // sweeps per restart
  std::size_t threads = 1;
};

inline constexpr double kInitialStep = 0.25;
inline constexpr double kStepFloor = 1e-9;

struct OptimizationResult {
  FloatConfiguration best;
  double value = 0.0;
  Cycle cycle;
  std::size_t best_restart = 0;
  std::size_t sweeps = 0;  // sweeps used by the winning restart
  std::size_t total_sweeps = 0;
  std::size_t restarts = 0;
  std::optional<ProvenBound> bound;
};

// Called with (restart, accepted objective) after every accepted move.
using AcceptObserver = std::function<void(std::size_t, double)>;

// Multi-start coordinate pattern search on w(E)/w(K_n) with E the identity
// cycle. Each restart starts from random_config(derive_seed(seed, r)); a sweep
// tries +h then -h on every coordinate in order, renormalizing each candidate
// and accepting strict improvements; h starts at 0.25 and halves after a
// sweep without improvement, stopping below 1e-9 or after `budget` sweeps.
// The best restart wins, lowest index on ties.
OptimizationResult optimize(const OptimizeOptions& options, const AcceptObserver& observer = {});

struct ConjectureRow {
  std::size_t n = 0;
  OptimizationResult minimum;
  OptimizationResult maximum;
  // Extremes over all cycles of each witness, as a consistency check.
  double min_witness_best_cycle_ratio = 0.0;
  double max_witness_best_cycle_ratio = 0.0;
  std::optional<ProvenBound> bound;
  bool conjecture = true;
};

ConjectureRow conjecture_row(std::size_t n, const OptimizeOptions& base);
std::vector<ConjectureRow> conjecture_table(std::size_t n_min, std::size_t n_max, const OptimizeOptions& base);

}  // namespace hamw
