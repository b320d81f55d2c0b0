#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fca {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (.cxt, CSV, JSON config). Carries the 1-based line
/// number where the problem was detected.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Enumeration exceeded a configured resource limit. `found` is the number
/// of concepts produced before the limit was hit.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& message, std::size_t found)
      : Error(message + " (found " + std::to_string(found) + " so far)"),
        found_(found) {}

  std::size_t found() const { return found_; }

 private:
  std::size_t found_;
};

/// Error propagated out of a named pipeline stage.
class StageError : public Error {
 public:
  StageError(const std::string& stage, const std::string& message)
      : Error(stage + ": " + message), stage_(stage) {}

  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace fca
