#include <doctest.h>

#include <cmath>
#include <sstream>

#include "hamw/cycles.hpp"
#include "hamw/geometry.hpp"
#include "hamw/pointset_io.hpp"
#include "../support/generators.hpp"
#include "../support/oracles.hpp"

using namespace hamw;
using hamw::testing::small_rational_config;
using hamw::testing::small_rational_point;

TEST_CASE("squared_distance") {
  CHECK(squared_distance(FloatPoint{0, 0}, FloatPoint{3, 4}) == 25.0);
  CHECK(squared_distance(FloatPoint{1, 2, 3}, FloatPoint{1, 2, 3}) == 0.0);
  const double near = squared_distance(FloatPoint{0, 0}, FloatPoint{1, 0});
  const double far = squared_distance(FloatPoint{0, 0}, FloatPoint{2, 0});
  CHECK(near == 1.0);
  CHECK(far == 4.0);
  CHECK(squared_distance(ExactPoint{Rational(1, 3), 0}, ExactPoint{1, Rational(1, 2)}) == Rational(4, 9) + Rational(1, 4));
  CHECK_THROWS_AS(squared_distance(FloatPoint{0, 0}, FloatPoint{0, 0, 0}), UsageError);
}

TEST_CASE("midpoint") {
  CHECK(midpoint(FloatPoint{0, 0}, FloatPoint{2, 4}) == FloatPoint{1, 2});
  CHECK(midpoint(FloatPoint{5, -1, 2}, FloatPoint{5, -1, 2}) == FloatPoint{5, -1, 2});
  CHECK(midpoint(ExactPoint{Rational(1, 3), 0}, ExactPoint{1, 0}) == ExactPoint{Rational(2, 3), 0});
  CHECK_THROWS_AS(midpoint(ExactPoint{0, 0}, ExactPoint{0, 0, 0}), UsageError);
}

TEST_CASE("point and configuration invariants") {
  CHECK_THROWS_AS(FloatPoint({1.0}), UsageError);
  CHECK_THROWS_AS(FloatPoint({1.0, 2.0, 3.0, 4.0}), UsageError);
  CHECK_THROWS_AS(FloatPoint({NAN, 0.0}), UsageError);
  CHECK_THROWS_AS(FloatConfiguration({FloatPoint{0, 0}, FloatPoint{1, 0}}), UsageError);
  CHECK_THROWS_AS(FloatConfiguration({FloatPoint{0, 0}, FloatPoint{1, 0}, FloatPoint{1, 0, 0}}), UsageError);
}

TEST_CASE("squared distance properties") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t dim = 2 + trial % 2;
    const auto p = small_rational_point(rng, dim);
    const auto q = small_rational_point(rng, dim);
    CHECK(squared_distance(p, q) == squared_distance(q, p));
    CHECK(squared_distance(p, q) >= 0);
    CHECK(Rational(4) * squared_distance(midpoint(p, q), p) == squared_distance(p, q));

    // Similarity: |s p + t - (s q + t)|^2 = s^2 |p - q|^2, float within 1e-12.
    const double s = 0.1 + 10.0 * rng.uniform();
    const double t = 100.0 * (rng.uniform() - 0.5);
    std::array<double, 3> ps{}, qs{};
    for (std::size_t i = 0; i < dim; ++i) {
      ps[i] = s * to_double(p[i]) + t;
      qs[i] = s * to_double(q[i]) + t;
    }
    const FloatPoint pf(std::span<const double>(ps.data(), dim));
    const FloatPoint qf(std::span<const double>(qs.data(), dim));
    const double expected = s * s * to_double(squared_distance(p, q));
    CHECK(std::fabs(squared_distance(pf, qf) - expected) <= 1e-12 * (1.0 + expected));
  }
}

TEST_CASE("random_config is deterministic, seeded and in range") {
  CHECK(random_config(1, 4, 2) == random_config(1, 4, 2));
  CHECK(random_config(1, 4, 2)[0][0] == 0.5665615751722809);
  CHECK(random_config(2, 4, 2)[0][0] == 0.5911897341980794);
  const auto c = random_config(0, 5, 3);
  CHECK(c.size() == 5);
  CHECK(c.dim() == 3);
  for (const auto& p : c.points())
    for (double x : p.coords()) {
      CHECK(x >= 0.0);
      CHECK(x < 1.0);
    }
  CHECK_THROWS_AS(random_config(0, 2, 2), UsageError);
  CHECK_THROWS_AS(random_config(0, 5, 4), UsageError);
}

TEST_CASE("regular_polygon") {
  CHECK(std::fabs(total_weight(regular_polygon(5, 1.0)) - 25.0) <= 1e-12);
  const auto square = regular_polygon(4, 1.0);
  for (std::size_t k = 0; k < 4; ++k)
    CHECK(squared_distance(square[k], square[(k + 1) % 4]) == doctest::Approx(2.0).epsilon(1e-15));
  const auto small = regular_polygon(5, 1.0);
  const auto big = regular_polygon(5, 2.0);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      CHECK(squared_distance(big[i], big[j]) == doctest::Approx(4.0 * squared_distance(small[i], small[j])).epsilon(1e-14));
  CHECK_THROWS_AS(regular_polygon(2, 1.0), UsageError);
  CHECK_THROWS_AS(regular_polygon(5, 0.0), UsageError);
}

TEST_CASE("normalize") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto c = random_config(seed, 3 + seed % 6, 2 + seed % 2);
    const auto n = normalize(c);
    CHECK(std::fabs(total_weight(n) - 1.0) <= 1e-12);
    const auto twice = normalize(n);
    for (std::size_t k = 0; k < n.size(); ++k)
      for (std::size_t i = 0; i < n.dim(); ++i) CHECK(std::fabs(twice[k][i] - n[k][i]) <= 1e-12);
    const auto cycle = Cycle::identity(c.size());
    CHECK(std::fabs(cycle_weight(n, cycle) - cycle_weight(c, cycle) / total_weight(c)) <= 1e-12);
  }
  const FloatConfiguration square({FloatPoint{0, 0}, FloatPoint{1, 0}, FloatPoint{1, 1}, FloatPoint{0, 1}});
  CHECK(std::fabs(cycle_weight(normalize(square), Cycle::identity(4)) - 0.5) <= 1e-12);
  CHECK_THROWS_AS(normalize(FloatConfiguration({FloatPoint{1, 1}, FloatPoint{1, 1}, FloatPoint{1, 1}})),
                  DegenerateError);
}

TEST_CASE("exact conversion preserves every coordinate") {
  const auto c = random_config(5, 6, 3);
  const auto exact = to_exact(c);
  CHECK(to_float(exact) == c);
  // Total weight computed two independent ways agrees exactly.
  CHECK(total_weight(exact) == hamw::testing::centroid_total_weight(exact));
}

TEST_CASE("point-set file format") {
  std::istringstream in(
      "# unit square\n"
      "points 4 dim 2 mode rational\n"
      "0 0\n"
      "1 0\n"
      "# comment inside\n"
      "1/1 2/2\n"
      "0 1\n");
  const auto any = read_point_set(in);
  REQUIRE(std::holds_alternative<ExactConfiguration>(any));
  const auto& c = std::get<ExactConfiguration>(any);
  CHECK(c.size() == 4);
  CHECK(c[2] == ExactPoint{1, 1});

  std::ostringstream out;
  write_point_set(out, c);
  CHECK(out.str() == "points 4 dim 2 mode rational\n0 0\n1 0\n1 1\n0 1\n");
}

TEST_CASE("point-set mode override converts exactly") {
  std::istringstream in("points 3 dim 2 mode float\n0.1 0\n1 0.25\n0 1e-3\n");
  const auto exact = std::get<ExactConfiguration>(read_point_set(in, ScalarMode::Rational));
  CHECK(exact[0][0] == Rational(1, 10));
  CHECK(exact[2][1] == Rational(1, 1000));

  std::istringstream in2("points 3 dim 2 mode rational\n1/3 0\n1 0\n0 1\n");
  const auto floats = std::get<FloatConfiguration>(read_point_set(in2, ScalarMode::Float));
  CHECK(floats[0][0] == 1.0 / 3.0);
}

TEST_CASE("point-set round trip is bit exact") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = random_config(seed, 3 + seed % 8, 2 + seed % 2);
    std::stringstream buf;
    write_point_set(buf, c);
    CHECK(std::get<FloatConfiguration>(read_point_set(buf)) == c);

    SplitMix64 rng(seed);
    const auto e = small_rational_config(rng, 4, 3);
    std::stringstream ebuf;
    write_point_set(ebuf, e);
    CHECK(std::get<ExactConfiguration>(read_point_set(ebuf)) == e);
  }
}

TEST_CASE("point-set format errors") {
  const auto fails = [](const char* text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_point_set(in), UsageError);
  };
  fails("");
  fails("points 3 dim 2\n0 0\n1 0\n0 1\n");
  fails("points 3 dim 4 mode float\n0 0 0 0\n1 0 0 0\n0 1 0 0\n");
  fails("points 2 dim 2 mode float\n0 0\n1 0\n");
  fails("points 3 dim 2 mode float\n0 0\n1 0\n");
  fails("points 3 dim 2 mode float\n0 0\n1 0 0\n0 1\n");
  fails("points 3 dim 2 mode float\n0 0\n1 0\n0 1\n5 5\n");
  fails("points 3 dim 2 mode float\n0 0\n1 x\n0 1\n");
  fails("points 3 dim 2 mode rational\n0 0\n1/0 0\n0 1\n");
  fails("points 3 dim 2 mode float\n0 0\nnan 0\n0 1\n");
  fails("points 3 dim 2 mode complex\n0 0\n1 0\n0 1\n");
}
