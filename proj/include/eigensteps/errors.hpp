#pragma once

#include <stdexcept>
#include <string>

namespace eigensteps {

/// Base of every error raised by the library. The CLI maps these to exit
/// code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Entry data does not match the declared (N, d) shape.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition does not hold (parameters out of range,
/// input off the affine hull, frame not tight, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (JSON, CSV, rationals, condition ids).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace eigensteps
