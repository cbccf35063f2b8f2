#pragma once

#include <stdexcept>
#include <string>

namespace hamw {

// Caller passed arguments outside an operation's domain (CLI exit code 2).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Input is valid but geometrically degenerate, e.g. zero total weight (CLI exit code 3).
class DegenerateError : public std::domain_error {
 public:
  explicit DegenerateError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace hamw
