#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation (e.g. A.cols != B.rows).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The operation is undefined for the zero code.
class DegenerateCode : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The request exceeds a configured computational limit.
class ScaleGuardError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text; `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An internal consistency check failed; indicates a bug or bad reference data.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcd
