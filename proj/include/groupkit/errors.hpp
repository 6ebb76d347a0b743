#pragma once

#include <stdexcept>
#include <string>

namespace groupkit {

// Base type for everything this library throws.
struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural law is broken: not a bijection, not a latin square, missing
// identity or inverses, failed associativity, subgroup not closed or not
// normal. Messages name the offending element or triple.
struct ValidationError : GroupError {
  using GroupError::GroupError;
};

// A construction would exceed the configured maximum group order.
struct SizeLimitError : GroupError {
  using GroupError::GroupError;
};

// Arguments violate an arithmetic precondition.
struct ParameterError : GroupError {
  using GroupError::GroupError;
};

// A check was invoked on inputs outside its hypothesis, e.g. a computation
// that assumes a soluble group was handed an insoluble one.
struct HypothesisError : GroupError {
  using GroupError::GroupError;
};

// An internal invariant failed. Indicates a bug in the library, not bad input.
struct InternalError : GroupError {
  using GroupError::GroupError;
};

// Could not read or write a file.
struct IoError : GroupError {
  using GroupError::GroupError;
};

// Syntax or range problem in the group-spec language; carries the source
// position at which parsing failed.
struct ParseError : GroupError {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : GroupError(msg + " (line " + std::to_string(line_) + ", column " +
                   std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

}  // namespace groupkit
