#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plslab {

/// Malformed textual input (WCNF, rationals, instance JSON).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A solution that is not feasible for the problem it was handed to.
class InfeasibleSolution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive enumeration would exceed the configured solution cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Distance table has no squared-Euclidean realization within tolerance.
class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace plslab
