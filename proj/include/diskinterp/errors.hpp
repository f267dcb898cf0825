#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diskinterp {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (negative degree,
// nonpositive radius, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Inconsistent ball configuration, orbit schedule or probe family.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// The Vandermonde system is numerically singular; the ball collection is not
// unisolvent for the requested degree.
class UnisolvenceError : public Error {
 public:
  UnisolvenceError(const std::string& what, double sigma_ratio)
      : Error(what), sigma_ratio_(sigma_ratio) {}

  double sigma_ratio() const noexcept { return sigma_ratio_; }

 private:
  double sigma_ratio_;
};

// A function returned a non-finite value at a cubature node, or a data
// integral came out non-finite.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. line() is 1-based; 0 when the error is not tied to a
// single line (e.g. a ball-count mismatch).
class ParseError : public IoError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : IoError(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace diskinterp
