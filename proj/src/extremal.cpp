#include "hamw/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hamw/bounds.hpp"
#include "hamw/parallel.hpp"
#include "hamw/splitmix64.hpp"

namespace hamw {

namespace {

bool improves(Objective objective, double candidate, double current) {
  return objective == Objective::Maximize ? candidate > current : candidate < current;
}

struct RestartResult {
  FloatConfiguration best;
  double value;
  std::size_t sweeps;
};

FloatConfiguration with_coordinate(const FloatConfiguration& c, std::size_t index, double delta) {
  const std::size_t dim = c.dim();
  std::vector<FloatPoint> points(c.points().begin(), c.points().end());
  points[index / dim][index % dim] += delta;
  return FloatConfiguration(std::move(points));
}

RestartResult run_restart(const OptimizeOptions& o, std::size_t restart, const AcceptObserver& observer) {
  const Cycle cycle = Cycle::identity(o.n);
  FloatConfiguration current = normalize(random_config(derive_seed(o.seed, restart), o.n, o.dim));
  double value = ratio(current, cycle);
  const std::size_t coords = o.n * o.dim;
  double h = kInitialStep;
  std::size_t sweeps = 0;
  while (h >= kStepFloor && sweeps < o.budget) {
    ++sweeps;
    bool improved = false;
    for (std::size_t i = 0; i < coords; ++i) {
      for (const double delta : {h, -h}) {
        FloatConfiguration candidate = with_coordinate(current, i, delta);
        double candidate_value = 0.0;
        try {
          candidate = normalize(candidate);
          candidate_value = ratio(candidate, cycle);
        } catch (const DegenerateError&) {
          continue;
        }
        if (improves(o.objective, candidate_value, value)) {
          current = std::move(candidate);
          value = candidate_value;
          improved = true;
          if (observer) observer(restart, value);
          break;
        }
      }
    }
    if (!improved) h /= 2.0;
  }
  return {std::move(current), value, sweeps};
}

double best_cycle_ratio(const FloatConfiguration& c, Objective objective) {
  double best = objective == Objective::Maximize ? -1.0 : 2.0;
  for (const auto& cycle : enumerate_cycles(c.size())) {
    const double r = ratio(c, cycle);
    if (improves(objective, r, best)) best = r;
  }
  return best;
}

}  // namespace

std::string_view objective_name(Objective o) { return o == Objective::Maximize ? "maximize" : "minimize"; }

Objective parse_objective(std::string_view text) {
  if (text == "maximize" || text == "max") return Objective::Maximize;
  if (text == "minimize" || text == "min") return Objective::Minimize;
  throw UsageError("objective must be 'maximize' or 'minimize', got '" + std::string(text) + "'");
}

double ratio(const FloatConfiguration& c, const Cycle& cycle) {
  // w(K_n) is formed as w(E) + w(D) so that rounding can never push the
  // ratio above 1 when w(D) is tiny.
  const double on_cycle = cycle_weight(c, cycle);
  const double total = on_cycle + complement_weight(c, cycle);
  if (!(total > 0.0)) throw DegenerateError("ratio is undefined when all points coincide");
  return on_cycle / total;
}

std::optional<ProvenBound> proven_bound(std::size_t n) {
  if (n == 4) return ProvenBound{0.5, 1.0, false};
  if (n == 5) return ProvenBound{theorem2_lower(), theorem2_upper(), true};
  return std::nullopt;
}

OptimizationResult optimize(const OptimizeOptions& o, const AcceptObserver& observer) {
  if (o.n < 4 || o.n > 7) throw UsageError("optimize supports 4 <= n <= 7");
  if (o.dim != 2 && o.dim != 3) throw UsageError("dimension must be 2 or 3");
  if (o.restarts < 1) throw UsageError("optimize needs at least one restart");
  if (o.budget < 1) throw UsageError("optimize needs a sweep budget of at least 1");

  std::vector<std::optional<RestartResult>> results(o.restarts);
  parallel_for(o.restarts, o.threads, [&](std::size_t r) { results[r] = run_restart(o, r, observer); });

  std::size_t winner = 0;
  std::size_t total_sweeps = 0;
  for (std::size_t r = 0; r < results.size(); ++r) {
    total_sweeps += results[r]->sweeps;
    if (improves(o.objective, results[r]->value, results[winner]->value)) winner = r;
  }
  auto& best = *results[winner];
  return OptimizationResult{std::move(best.best), best.value,       Cycle::identity(o.n), winner,
                            best.sweeps,          total_sweeps,     o.restarts,           proven_bound(o.n)};
}

ConjectureRow conjecture_row(std::size_t n, const OptimizeOptions& base) {
  OptimizeOptions o = base;
  o.n = n;
  o.objective = Objective::Minimize;
  auto minimum = optimize(o);
  o.objective = Objective::Maximize;
  auto maximum = optimize(o);
  ConjectureRow row{n, std::move(minimum), std::move(maximum), 0.0, 0.0, proven_bound(n), !proven_bound(n)};
  row.min_witness_best_cycle_ratio = best_cycle_ratio(row.minimum.best, Objective::Minimize);
  row.max_witness_best_cycle_ratio = best_cycle_ratio(row.maximum.best, Objective::Maximize);
  return row;
}

std::vector<ConjectureRow> conjecture_table(std::size_t n_min, std::size_t n_max, const OptimizeOptions& base) {
  if (n_min < 4 || n_max > 7 || n_min > n_max) throw UsageError("conjecture table needs 4 <= n_min <= n_max <= 7");
  std::vector<ConjectureRow> rows;
  for (std::size_t n = n_min; n <= n_max; ++n) rows.push_back(conjecture_row(n, base));
  return rows;
}

}  // namespace hamw
