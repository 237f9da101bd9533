#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace discdeg {

/// Base of all library errors that indicate a failed computation rather than
/// bad user input (bad input uses std::invalid_argument).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division that was required to be exact left a nonzero remainder.
class NonExactDivision : public Error {
 public:
  using Error::Error;
};

/// Two evaluation routes (or two generic points) disagree, or a result that
/// must be integral is not. Always an internal bug.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// A sampled point annihilates a root.
class NonGenericPoint : public Error {
 public:
  using Error::Error;
};

/// Orbit or Weyl group enumeration would exceed the configured size bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed group or weight specification. `position` is a 0-based offset
/// into the offending string.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " +
                              std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace discdeg
