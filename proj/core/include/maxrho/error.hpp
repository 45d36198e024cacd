#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxrho {

/// Caller passed arguments outside an operation's contract.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a stated capability boundary (e.g. canonical form above n=12).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterative method failed to converge.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double last_residual)
      : std::runtime_error(what), last_residual_(last_residual) {}

  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

/// Malformed text input; offset is the byte position of the first bad byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A checked mathematical identity did not hold.
class PropertyViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace maxrho
