#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quiver {

/// Base class for everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (non-simple input to
/// complement, n < 2 for snap, disconnected input for spanning_tree, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Index argument outside [0, size).
class IndexError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Malformed .qvr or batch input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The floating point side could not give a trustworthy answer: an
/// eigenvalue too close to the kernel threshold, or an eigensolver residual
/// outside contract.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace quiver
