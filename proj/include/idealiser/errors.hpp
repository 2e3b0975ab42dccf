#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idealiser {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial, skew element or config text. `position` is a
/// 0-based byte offset into the offending input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class RingMismatchError : public Error {
 public:
  using Error::Error;
};

/// Violated precondition on otherwise well-formed input (square Pell
/// parameter, zero ideal for a stabiliser, missing prime flag, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gröbner pair cap exceeded. Never silently converted into an answer.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace idealiser
