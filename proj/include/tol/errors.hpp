#pragma once

#include <stdexcept>
#include <string>

namespace tol {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file or string. `line` is 1-based, 0 when unknown.
struct ParseError : Error {
  ParseError(const std::string& msg, int line_no = 0)
      : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
  int line = 0;
};

// Valid input that violates a domain precondition (axiom failure,
// unreachable vertex pair, oversized search space, ...).
struct DomainError : Error {
  using Error::Error;
};

// Internal contradiction: the input passed its preconditions but an
// algorithm reached a state its theory rules out.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace tol
