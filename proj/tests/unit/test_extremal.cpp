#include <doctest.h>

#include <cmath>
#include <map>

#include "hamw/bounds.hpp"
#include "hamw/extremal.hpp"

using namespace hamw;

TEST_CASE("ratio") {
  const FloatConfiguration square({FloatPoint{0, 0}, FloatPoint{1, 0}, FloatPoint{1, 1}, FloatPoint{0, 1}});
  CHECK(ratio(square, Cycle::identity(4)) == 0.5);
  CHECK(std::fabs(ratio(regular_polygon(5, 1.0), Cycle::identity(5)) - 0.2763932023) <= 1e-10);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = random_config(seed, 5, 3);
    for (const auto& cycle : enumerate_cycles(5))
      CHECK(std::fabs(ratio(c, cycle) + ratio(c, complement_cycle(cycle)) - 1.0) <= 1e-12);
  }
  const FloatPoint p{0, 0};
  CHECK_THROWS_AS(ratio(FloatConfiguration({p, p, p}), Cycle::identity(3)), DegenerateError);
}

TEST_CASE("proven bounds") {
  CHECK(proven_bound(4)->lower == 0.5);
  CHECK_FALSE(proven_bound(4)->upper_attained);
  CHECK(proven_bound(5)->upper == theorem2_upper());
  CHECK_FALSE(proven_bound(6).has_value());
}

TEST_CASE("optimize reaches the K_5 extremes") {
  OptimizeOptions o;
  o.seed = 1;
  o.n = 5;
  o.restarts = 5;
  o.objective = Objective::Maximize;
  const auto hi = optimize(o);
  CHECK(hi.value >= 0.723606);
  CHECK(hi.value <= theorem2_upper() + 1e-9);
  o.objective = Objective::Minimize;
  const auto lo = optimize(o);
  CHECK(lo.value <= 0.276394);
  CHECK(lo.value >= theorem2_lower() - 1e-9);
  CHECK(std::fabs(hi.value + lo.value - 1.0) <= 2e-6);
  CHECK(std::fabs(total_weight(hi.best) - 1.0) <= 1e-12);
  CHECK(hi.cycle == Cycle::identity(5));
}

TEST_CASE("optimize on K_4") {
  OptimizeOptions o;
  o.seed = 2;
  o.n = 4;
  o.restarts = 5;
  o.objective = Objective::Minimize;
  CHECK(std::fabs(optimize(o).value - 0.5) <= 1e-6);
  o.objective = Objective::Maximize;
  const auto hi = optimize(o);
  CHECK(hi.value >= 0.99);
  CHECK(hi.value <= 1.0);
}

TEST_CASE("accepted objective values are monotone within each restart") {
  OptimizeOptions o;
  o.seed = 5;
  o.n = 6;
  o.dim = 3;
  o.restarts = 3;
  for (const auto objective : {Objective::Maximize, Objective::Minimize}) {
    o.objective = objective;
    std::map<std::size_t, std::vector<double>> accepted;
    const auto result = optimize(o, [&](std::size_t r, double v) { accepted[r].push_back(v); });
    CHECK(accepted.size() == 3);
    for (const auto& [restart, values] : accepted)
      for (std::size_t i = 1; i < values.size(); ++i) {
        if (objective == Objective::Maximize)
          CHECK(values[i] > values[i - 1]);
        else
          CHECK(values[i] < values[i - 1]);
      }
    CHECK(result.value == accepted[result.best_restart].back());
  }
}

TEST_CASE("optimize is deterministic and thread-count independent") {
  OptimizeOptions o;
  o.seed = 8;
  o.n = 7;
  o.restarts = 4;
  o.budget = 40;
  const auto a = optimize(o);
  o.threads = 3;
  const auto b = optimize(o);
  CHECK(a.value == b.value);
  CHECK(a.best == b.best);
  CHECK(a.best_restart == b.best_restart);
  CHECK(a.total_sweeps == b.total_sweeps);
  CHECK(a.sweeps <= 40);
}

TEST_CASE("optimize argument checks") {
  OptimizeOptions o;
  o.n = 3;
  CHECK_THROWS_AS(optimize(o), UsageError);
  o.n = 8;
  CHECK_THROWS_AS(optimize(o), UsageError);
  o.n = 5;
  o.restarts = 0;
  CHECK_THROWS_AS(optimize(o), UsageError);
  o.restarts = 1;
  o.budget = 0;
  CHECK_THROWS_AS(optimize(o), UsageError);
  CHECK_THROWS_AS(parse_objective("sideways"), UsageError);
  CHECK(parse_objective("max") == Objective::Maximize);
}

TEST_CASE("conjecture table") {
  OptimizeOptions o;
  o.seed = 3;
  o.restarts = 3;
  const auto rows = conjecture_table(4, 6, o);
  REQUIRE(rows.size() == 3);
  CHECK_FALSE(rows[0].conjecture);
  CHECK(rows[0].bound->lower == 0.5);
  CHECK(rows[0].bound->upper == 1.0);
  CHECK_FALSE(rows[0].bound->upper_attained);
  CHECK(rows[1].bound->lower == theorem2_lower());
  CHECK(rows[1].bound->upper == theorem2_upper());
  CHECK(rows[2].conjecture);
  CHECK_FALSE(rows[2].bound.has_value());
  for (const auto& row : rows) {
    CHECK(row.minimum.value <= row.maximum.value);
    // Relabeling: the best cycle on each witness is at least as extreme as the identity cycle.
    CHECK(row.min_witness_best_cycle_ratio <= row.minimum.value + 1e-12);
    CHECK(row.max_witness_best_cycle_ratio >= row.maximum.value - 1e-12);
  }
  CHECK_THROWS_AS(conjecture_table(3, 5, o), UsageError);
  CHECK_THROWS_AS(conjecture_table(5, 8, o), UsageError);
}
