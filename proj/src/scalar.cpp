#include "hamw/scalar.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include <fmt/format.h>

#include "hamw/errors.hpp"

namespace hamw {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

// [+-]digits
bool is_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return all_digits(s);
}

Rational integer_rational(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Rational(std::string(s));
}

Rational power_of_ten(long exponent) {
  Rational r{1};
  for (long i = 0; i < exponent; ++i) r *= 10;
  return r;
}

[[noreturn]] void bad_token(std::string_view token) {
  throw UsageError("not a number: '" + std::string(token) + "'");
}

}  // namespace

std::string_view mode_name(ScalarMode mode) { return mode == ScalarMode::Float ? "float" : "rational"; }

ScalarMode parse_mode(std::string_view name) {
  if (name == "float") return ScalarMode::Float;
  if (name == "rational") return ScalarMode::Rational;
  throw UsageError("mode must be 'float' or 'rational', got '" + std::string(name) + "'");
}

std::string format_scalar(double x) { return fmt::format("{}", x); }

std::string format_scalar(const Rational& x) { return x.str(); }

Rational parse_rational(std::string_view token) {
  if (token.empty()) bad_token(token);
  if (const auto slash = token.find('/'); slash != std::string_view::npos) {
    const auto num = token.substr(0, slash);
    const auto den = token.substr(slash + 1);
    if (!is_integer(num) || !all_digits(den)) bad_token(token);
    const Rational d = integer_rational(den);
    if (d.is_zero()) throw UsageError("zero denominator in '" + std::string(token) + "'");
    return integer_rational(num) / d;
  }

  std::string_view rest = token;
  bool negative = false;
  if (rest.front() == '+' || rest.front() == '-') {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
    const auto exp_text = rest.substr(e + 1);
    if (!is_integer(exp_text)) bad_token(token);
    std::string_view digits = exp_text;
    if (digits.front() == '+') digits.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || exponent > 4000 || exponent < -4000)
      bad_token(token);
    rest = rest.substr(0, e);
  }
  std::string mantissa;
  if (const auto dot = rest.find('.'); dot != std::string_view::npos) {
    const auto whole = rest.substr(0, dot);
    const auto frac = rest.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_token(token);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) bad_token(token);
    mantissa = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(rest)) bad_token(token);
    mantissa = std::string(rest);
  }
  Rational value = integer_rational(mantissa);
  if (exponent >= 0)
    value *= power_of_ten(exponent);
  else
    value /= power_of_ten(-exponent);
  return negative ? Rational(-value) : value;
}

double parse_double(std::string_view token) {
  if (token.find('/') != std::string_view::npos) return to_double(parse_rational(token));
  // Validate the grammar first so that inf/nan/hex literals are rejected.
  (void)parse_rational(token);
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || !std::isfinite(value)) bad_token(token);
  return value;
}

}  // namespace hamw
