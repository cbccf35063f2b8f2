#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "hamw/errors.hpp"
#include "hamw/scalar.hpp"

namespace hamw {

// A point in the plane (dim 2) or in space (dim 3).
template <Scalar S>
class Point {
 public:
  static constexpr std::size_t kMaxDim = 3;

  Point() = default;
  Point(std::initializer_list<S> coords);
  explicit Point(std::span<const S> coords);

  std::size_t dim() const noexcept { return dim_; }
  const S& operator[](std::size_t i) const { return coords_[i]; }
  S& operator[](std::size_t i) { return coords_[i]; }
  std::span<const S> coords() const noexcept { return {coords_.data(), dim_}; }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t i = 0; i < a.dim_; ++i)
      if (a.coords_[i] != b.coords_[i]) return false;
    return true;
  }

 private:
  std::array<S, kMaxDim> coords_{};
  std::size_t dim_ = 0;
};

// Labeled tuple of n >= 3 points sharing one dimension.
template <Scalar S>
class Configuration {
 public:
  explicit Configuration(std::vector<Point<S>> points);

  std::size_t size() const noexcept { return points_.size(); }
  std::size_t dim() const noexcept { return points_.front().dim(); }
  static constexpr ScalarMode mode() noexcept { return mode_of<S>; }

  const Point<S>& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point<S>> points() const noexcept { return points_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Point<S>> points_;
};

using FloatPoint = Point<double>;
using ExactPoint = Point<Rational>;
using FloatConfiguration = Configuration<double>;
using ExactConfiguration = Configuration<Rational>;

template <Scalar S>
S squared_distance(const Point<S>& p, const Point<S>& q);

template <Scalar S>
Point<S> midpoint(const Point<S>& p, const Point<S>& q);

// Coordinates uniform in [0,1), drawn point-major from SplitMix64(seed).
FloatConfiguration random_config(std::uint64_t seed, std::size_t n, std::size_t dim);

// Vertex k at angle 2*pi*k/n on a circle centred at the origin.
FloatConfiguration regular_polygon(std::size_t n, double circumradius);

// Centroid moved to the origin and scaled so the total pairwise squared
// distance is 1. Throws DegenerateError when all points coincide.
FloatConfiguration normalize(const FloatConfiguration& c);

// Exact conversion: every finite double is a dyadic rational.
ExactConfiguration to_exact(const FloatConfiguration& c);
FloatConfiguration to_float(const ExactConfiguration& c);

extern template class Point<double>;
extern template class Point<Rational>;
extern template class Configuration<double>;
extern template class Configuration<Rational>;
extern template double squared_distance(const Point<double>&, const Point<double>&);
extern template Rational squared_distance(const Point<Rational>&, const Point<Rational>&);
extern template Point<double> midpoint(const Point<double>&, const Point<double>&);
extern template Point<Rational> midpoint(const Point<Rational>&, const Point<Rational>&);

}  // namespace hamw
