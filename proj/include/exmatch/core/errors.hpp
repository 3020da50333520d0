#pragma once

#include <stdexcept>
#include <string>

namespace exmatch {

/// An enumeration or search would exceed a configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A malformed instance, matrix or family file.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed. Always a bug or a broken mathematical
/// guarantee, never a user error.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace exmatch
