#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdepth {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in rings with different numbers of variables.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Precondition on an argument failed (zero ideal, unit ideal, bad cap, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exact computation would exceed a configured size or node budget.
/// Raised instead of returning an approximate answer.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

  /// Byte offset into the input where parsing failed.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace sdepth
