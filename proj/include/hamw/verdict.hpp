#pragma once

#include <string_view>

namespace hamw {

enum class Verdict { Holds, HoldsWithEquality, Violated, Degenerate };

constexpr std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::HoldsWithEquality: return "holds-with-equality";
    case Verdict::Violated: return "violated";
    case Verdict::Degenerate: return "degenerate";
  }
  return "unknown";
}

constexpr bool holds(Verdict v) { return v == Verdict::Holds || v == Verdict::HoldsWithEquality; }

}  // namespace hamw
