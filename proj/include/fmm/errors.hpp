#pragma once

#include <stdexcept>
#include <string>

namespace fmm {

// Base class for all library errors. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad argument value (u <= v, zero denominator, trials < 1, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Shapes that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Structurally well-formed input that violates a content rule
// (dead term, rank mismatch, zero coefficient in a file, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A peel would discard a live coefficient.
class PeelViolationError : public Error {
 public:
  using Error::Error;
};

// Unreadable or malformed input text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace fmm
