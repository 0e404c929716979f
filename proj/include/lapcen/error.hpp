#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lapcen {

/// Malformed input data (edge lists, scenario files). Carries the 1-based
/// line number when the failure is tied to a line, 0 otherwise.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// The eigensolver failed, or its output violates the Laplacian contract.
class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A linear system that should be nonsingular could not be factorized.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coefficient or score that is undefined for the given input
/// (constant vectors in correlations, no principal direction, ...).
class UndefinedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace lapcen
