#include <doctest.h>

#include <cmath>

#include "hamw/errors.hpp"
#include "hamw/scalar.hpp"
#include "hamw/splitmix64.hpp"
#include "hamw/surd.hpp"

using namespace hamw;

TEST_CASE("parse_rational reads p/q, integers and decimals exactly") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("-1.25e-3") == Rational(-1, 800));
  CHECK(parse_rational("2.5E+2") == Rational(250));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("5.") == Rational(5));
}

TEST_CASE("parse_rational rejects tokens that are not exact numbers") {
  for (const char* bad : {"", "inf", "nan", "0x1p3", "1/0", "1/-2", "1.2.3", "e5", "3/", "/4", "1e", "abc"})
    CHECK_THROWS_AS(parse_rational(bad), UsageError);
}

TEST_CASE("parse_double") {
  CHECK(parse_double("0.5") == 0.5);
  CHECK(parse_double("1/3") == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  CHECK(parse_double("-2e3") == -2000.0);
  CHECK_THROWS_AS(parse_double("inf"), UsageError);
  CHECK_THROWS_AS(parse_double("1e999"), UsageError);
}

TEST_CASE("format_scalar round-trips doubles and prints rationals canonically") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 123456789.125})
    CHECK(parse_double(format_scalar(x)) == x);
  CHECK(format_scalar(Rational(6, 8)) == "3/4");
  CHECK(format_scalar(Rational(4, 2)) == "2");
}

TEST_CASE("sign of u + v sqrt5") {
  CHECK(sign_plus_sqrt5(Rational(0), Rational(0)) == 0);
  CHECK(sign_plus_sqrt5(Rational(1), Rational(0)) == 1);
  CHECK(sign_plus_sqrt5(Rational(-3), Rational(1)) == -1);  // 2.236 < 3
  CHECK(sign_plus_sqrt5(Rational(-2), Rational(1)) == 1);
  CHECK(sign_plus_sqrt5(Rational(3), Rational(-1)) == 1);
  CHECK(sign_plus_sqrt5(Rational(2), Rational(-1)) == -1);
  CHECK(sign_plus_sqrt5(Rational(-5), Rational(-1)) == -1);
  // Values straddling sqrt5 = 2.2360679774997896...
  CHECK(sign_plus_sqrt5(Rational(-2236067977, 1000000000), Rational(1)) == 1);
  CHECK(sign_plus_sqrt5(Rational(-2236067978, 1000000000), Rational(1)) == -1);
}

TEST_CASE("sign of u + v sqrt5 agrees with floating point away from zero") {
  SplitMix64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const long u = static_cast<long>(rng.next() % 2001) - 1000;
    const long v = static_cast<long>(rng.next() % 2001) - 1000;
    const double value = static_cast<double>(u) + static_cast<double>(v) * std::sqrt(5.0);
    if (std::fabs(value) < 1e-6) continue;
    CHECK(sign_plus_sqrt5(Rational(u), Rational(v)) == (value > 0 ? 1 : -1));
  }
}

TEST_CASE("SplitMix64 reference stream") {
  // Reference outputs of the published splitmix64.c for seed 1234567.
  SplitMix64 g(1234567);
  CHECK(g.next() == 6457827717110365317ULL);
  CHECK(g.next() == 3203168211198807973ULL);
  CHECK(g.next() == 9817491932198370423ULL);

  SplitMix64 zero(0);
  CHECK(zero.next() == 16294208416658607535ULL);

  SplitMix64 one(1);
  SplitMix64 two(2);
  CHECK(one.uniform() == 0.5665615751722809);
  CHECK(two.uniform() == 0.5911897341980794);
}

TEST_CASE("derive_seed is the first draw of the shifted stream") {
  CHECK(derive_seed(1234566, 1) == 6457827717110365317ULL);
  CHECK(derive_seed(0, 0) == 16294208416658607535ULL);
}

TEST_CASE("uniform draws stay in [0,1)") {
  SplitMix64 g(99);
  for (int i = 0; i < 100000; ++i) {
    const double u = g.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
}
