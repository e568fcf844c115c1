#pragma once

#include <stdexcept>
#include <string>

namespace permutokit {

/// Raised when an argument violates a documented invariant or precondition.
/// The message names the violated invariant.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an enumeration would exceed its size guard.
class SizeGuardError : public ValidationError {
 public:
  explicit SizeGuardError(const std::string& what) : ValidationError(what) {}
};

inline void require(bool condition, const char* message) {
  if (!condition) throw ValidationError(message);
}

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ValidationError(message);
}

}  // namespace permutokit
