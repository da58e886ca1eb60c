#pragma once

#include <stdexcept>
#include <string>

namespace pgit {

/// Malformed input: bad type strings, weight strings, unknown options.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A mathematical hypothesis or configured guard is not met for the request
/// (non-dominant weight, rank-1 factor, low dimension, group too large).
class HypothesisError : public std::domain_error {
 public:
  explicit HypothesisError(const std::string& what) : std::domain_error(what) {}
};

/// An internal consistency check failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pgit
