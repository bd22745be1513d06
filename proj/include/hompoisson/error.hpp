#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hompoisson {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(const std::string& what, std::size_t expected, std::size_t got)
      : Error(what + ": dimension mismatch (expected " + std::to_string(expected) + ", got " +
              std::to_string(got) + ")") {}
};

class NotInvertible : public Error {
 public:
  NotInvertible() : Error("matrix is not invertible") {}
};

/// A construction was asked to run on input that violates its hypothesis.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// Malformed spec/map file or command-line value. `line` is 0 when unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Refused because the computation would exceed the desk-scale limits.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace hompoisson
