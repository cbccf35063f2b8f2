#pragma once

#include <iosfwd>
#include <optional>
#include <variant>

#include "hamw/geometry.hpp"

namespace hamw {

using AnyConfiguration = std::variant<FloatConfiguration, ExactConfiguration>;

// Plain-text point-set format:
//
//   # optional comment lines
//   points <n> dim <d> mode <float|rational>
//   x y [z]        (n lines; decimal literals or p/q tokens)
//
// `as_mode` overrides the declared mode. Reading a float file in rational mode
// converts each decimal literal exactly; the reverse rounds to nearest.
AnyConfiguration read_point_set(std::istream& in, std::optional<ScalarMode> as_mode = std::nullopt);

template <Scalar S>
void write_point_set(std::ostream& out, const Configuration<S>& c);

void write_point_set(std::ostream& out, const AnyConfiguration& c);

}  // namespace hamw
