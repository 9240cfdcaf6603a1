#pragma once

#include <stdexcept>
#include <string>

namespace geobary {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain: kind mismatch, non-finite
/// coordinates, off-sheet hyperboloid points, t outside [0,1].
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid space descriptor or solver/report configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of a predicate was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The triple sampler ran out of its attempt budget.
class SamplingError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON input; carries the 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace geobary
