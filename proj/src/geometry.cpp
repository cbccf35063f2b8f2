#include "hamw/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hamw/splitmix64.hpp"

namespace hamw {

namespace {

void check_dim(std::size_t dim) {
  if (dim != 2 && dim != 3) throw UsageError("dimension must be 2 or 3, got " + std::to_string(dim));
}

template <Scalar S>
void check_same_dim(const Point<S>& p, const Point<S>& q) {
  if (p.dim() != q.dim())
    throw UsageError("dimension mismatch: " + std::to_string(p.dim()) + " vs " + std::to_string(q.dim()));
}

}  // namespace

template <Scalar S>
Point<S>::Point(std::initializer_list<S> coords) : Point(std::span<const S>(coords.begin(), coords.size())) {}

template <Scalar S>
Point<S>::Point(std::span<const S> coords) : dim_(coords.size()) {
  check_dim(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if constexpr (!is_exact<S>) {
      if (!std::isfinite(coords[i])) throw UsageError("point coordinates must be finite");
    }
    coords_[i] = coords[i];
  }
}

template <Scalar S>
Configuration<S>::Configuration(std::vector<Point<S>> points) : points_(std::move(points)) {
  if (points_.size() < 3) throw UsageError("a configuration needs at least 3 points");
  const std::size_t d = points_.front().dim();
  check_dim(d);
  for (const auto& p : points_)
    if (p.dim() != d) throw UsageError("all points of a configuration must share one dimension");
}

template <Scalar S>
S squared_distance(const Point<S>& p, const Point<S>& q) {
  check_same_dim(p, q);
  S sum{0};
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const S delta = p[i] - q[i];
    sum += delta * delta;
  }
  return sum;
}

template <Scalar S>
Point<S> midpoint(const Point<S>& p, const Point<S>& q) {
  check_same_dim(p, q);
  Point<S> m = p;
  for (std::size_t i = 0; i < p.dim(); ++i) m[i] = (p[i] + q[i]) / S{2};
  return m;
}

FloatConfiguration random_config(std::uint64_t seed, std::size_t n, std::size_t dim) {
  if (n < 3) throw UsageError("random_config needs n >= 3");
  check_dim(dim);
  SplitMix64 rng(seed);
  std::vector<FloatPoint> points;
  points.reserve(n);
  std::array<double, 3> buf{};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < dim; ++i) buf[i] = rng.uniform();
    points.emplace_back(std::span<const double>(buf.data(), dim));
  }
  return FloatConfiguration(std::move(points));
}

FloatConfiguration regular_polygon(std::size_t n, double circumradius) {
  if (n < 3) throw UsageError("regular_polygon needs n >= 3");
  if (!(circumradius > 0.0) || !std::isfinite(circumradius))
    throw UsageError("regular_polygon needs a positive circumradius");
  std::vector<FloatPoint> points;
  points.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    points.push_back({circumradius * std::cos(angle), circumradius * std::sin(angle)});
  }
  return FloatConfiguration(std::move(points));
}

FloatConfiguration normalize(const FloatConfiguration& c) {
  const std::size_t n = c.size();
  const std::size_t d = c.dim();
  std::array<double, 3> centroid{};
  for (const auto& p : c.points())
    for (std::size_t i = 0; i < d; ++i) centroid[i] += p[i];
  for (std::size_t i = 0; i < d; ++i) centroid[i] /= static_cast<double>(n);

  // Sum over pairs |p_i - p_j|^2 equals n * sum |p_i - centroid|^2.
  std::vector<FloatPoint> centred(c.points().begin(), c.points().end());
  double spread = 0.0;
  for (auto& p : centred) {
    for (std::size_t i = 0; i < d; ++i) {
      p[i] -= centroid[i];
      spread += p[i] * p[i];
    }
  }
  const double total = static_cast<double>(n) * spread;
  if (!(total > 0.0)) throw DegenerateError("cannot normalize a configuration whose points all coincide");
  const double scale = 1.0 / std::sqrt(total);
  for (auto& p : centred)
    for (std::size_t i = 0; i < d; ++i) p[i] *= scale;
  return FloatConfiguration(std::move(centred));
}

ExactConfiguration to_exact(const FloatConfiguration& c) {
  std::vector<ExactPoint> points;
  points.reserve(c.size());
  std::array<Rational, 3> buf;
  for (const auto& p : c.points()) {
    for (std::size_t i = 0; i < p.dim(); ++i) buf[i] = Rational(p[i]);
    points.emplace_back(std::span<const Rational>(buf.data(), p.dim()));
  }
  return ExactConfiguration(std::move(points));
}

FloatConfiguration to_float(const ExactConfiguration& c) {
  std::vector<FloatPoint> points;
  points.reserve(c.size());
  std::array<double, 3> buf{};
  for (const auto& p : c.points()) {
    for (std::size_t i = 0; i < p.dim(); ++i) buf[i] = to_double(p[i]);
    points.emplace_back(std::span<const double>(buf.data(), p.dim()));
  }
  return FloatConfiguration(std::move(points));
}

template class Point<double>;
template class Point<Rational>;
template class Configuration<double>;
template class Configuration<Rational>;
template double squared_distance(const Point<double>&, const Point<double>&);
template Rational squared_distance(const Point<Rational>&, const Point<Rational>&);
template Point<double> midpoint(const Point<double>&, const Point<double>&);
template Point<Rational> midpoint(const Point<Rational>&, const Point<Rational>&);

}  // namespace hamw
