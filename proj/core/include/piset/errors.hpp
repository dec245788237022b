#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace piset {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad parameters, bad files, bad sets).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A value left the range the library computes exactly in.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// A configurable work budget (trial division, field size) was exhausted.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Enumeration stopped at the element cap. `partial()` is the number of
/// elements found before giving up.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t partial)
      : Error(what), partial_(partial) {}
  std::uint64_t partial() const noexcept { return partial_; }

 private:
  std::uint64_t partial_;
};

/// A constructed group failed its order or spectrum validation.
class ValidationFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace piset
