#pragma once

#include <stdexcept>
#include <string>

namespace ppforge {

// A named precondition of an operation does not hold (not a PP, wrong d, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operands come from two different fields.
class FieldMismatch : public std::invalid_argument {
 public:
  FieldMismatch() : std::invalid_argument("operands belong to different fields") {}
};

// The field is larger than the configured exhaustive-mode point cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace ppforge
