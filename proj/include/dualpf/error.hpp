#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dualpf {

enum class ErrorKind {
  DimensionMismatch,
  InvalidInput,
  Parse,
  NotIrreducible,
  NotConnected,
  InvalidPerturbation,
  NoConvergence,
  NotSingular,
  NotPositive,
  Inconsistent,
  SingularBordered,
  SubmatrixSingular,
  DegenerateDenominator,
  NotTied,
  UnknownInstance,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure the library reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Input text could not be read; `line()` is 1-based (0 when not tied to a line).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dualpf
