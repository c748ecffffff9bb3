#pragma once

#include <stdexcept>
#include <string>

namespace dgp {

// Malformed input (files, formulas, polygon data).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Caller violated a documented precondition (invalid polygon, min-distance
// assumption not met, out-of-range parameter).
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; indicates a bug, not bad input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Raised when a sum-of-radicals comparison cannot be decided within the
// configured precision budget. Deliberately loud; never silently guessed.
struct LengthComparisonError : std::runtime_error {
  explicit LengthComparisonError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dgp
