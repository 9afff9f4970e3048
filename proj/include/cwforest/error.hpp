#pragma once

#include <stdexcept>
#include <string>

namespace cwforest {

/// Raised when an input lies outside the modeled domain (zero or negative
/// rationals, malformed text, out-of-range tree addresses).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a request would exceed a configured resource cap.
class LimitError : public std::runtime_error {
 public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cwforest
