#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace hamw {

// Exact arbitrary-precision rational. Expression templates are disabled so
// generic code can use `auto` freely.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

enum class ScalarMode { Float, Rational };

template <class S>
concept Scalar = std::same_as<S, double> || std::same_as<S, Rational>;

template <Scalar S>
inline constexpr ScalarMode mode_of = std::same_as<S, double> ? ScalarMode::Float : ScalarMode::Rational;

template <Scalar S>
inline constexpr bool is_exact = std::same_as<S, Rational>;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline double abs_value(double x) { return std::fabs(x); }
inline Rational abs_value(const Rational& x) { return boost::multiprecision::abs(x); }

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

std::string_view mode_name(ScalarMode mode);
ScalarMode parse_mode(std::string_view name);

// Shortest decimal string that round-trips to the same double.
std::string format_scalar(double x);
// Canonical "p/q" (or "p" for integers).
std::string format_scalar(const Rational& x);

// Exact parse of "p/q", an integer, or a decimal literal with optional exponent.
// Throws UsageError for anything else (including inf/nan).
Rational parse_rational(std::string_view token);
// Parse a decimal literal, or "p/q" rounded to nearest double. Must be finite.
double parse_double(std::string_view token);

// Tolerances used throughout: derived quantities vs direct arithmetic.
inline constexpr double kDerivedTolerance = 1e-9;
inline constexpr double kArithmeticTolerance = 1e-12;

// residual / (1 + magnitude), the scale-free comparison used by float checks.
inline double normalized_residual(double residual, double magnitude) {
  return std::fabs(residual) / (1.0 + std::fabs(magnitude));
}

// |residual| relative to the largest term; 0 when every term vanishes.
inline double relative_residual(double residual, std::initializer_list<double> terms) {
  double scale = 0.0;
  for (double t : terms) scale = std::max(scale, std::fabs(t));
  if (scale == 0.0) return std::fabs(residual);
  return std::fabs(residual) / scale;
}

}  // namespace hamw
