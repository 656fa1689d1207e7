#pragma once

#include <stdexcept>
#include <string>

namespace harqopt {

/// Malformed input text (JSON syntax, wrong types, unknown keys).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A structurally well-formed value violates a documented invariant.
/// The message names the offending field or quantity.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// The latency budget cannot admit even the first block.
class InfeasibleLatency : public ValidationError {
 public:
  explicit InfeasibleLatency(const std::string& what) : ValidationError(what) {}
};

}  // namespace harqopt
