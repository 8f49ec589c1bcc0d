#pragma once

#include <stdexcept>
#include <string>

namespace pqsparse {

/// Bad run configuration (grid, config file, CLI arguments).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Inputs violate an operation precondition (out-of-range parameter, size
/// mismatch, zero column, ...). The message names the offending field.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure inside an algorithm (non-finite intermediate,
/// non-convergent dual optimization, singular covariance, ...).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem / serialization failure.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pqsparse
