#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conncraft {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on inputs that violate its stated precondition
/// (unknown vertex, wrong degree, disconnected graph, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Replaying a construction trace failed at a particular step.
class ReplayError : public PreconditionError {
 public:
  ReplayError(std::size_t step, const std::string& what)
      : PreconditionError("step " + std::to_string(step) + ": " + what),
        step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace conncraft
