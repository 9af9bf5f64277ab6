#ifndef NEWTON_ERRORS_HPP
#define NEWTON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace newton {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument value (negative coordinate, nonpositive scale, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Operands live in different ambient dimensions.
struct DimensionError : Error {
  explicit DimensionError(const std::string& what) : Error(what) {}
};

// No nonzero generator was supplied.
struct EmptyGeneratorError : Error {
  explicit EmptyGeneratorError(const std::string& what) : Error(what) {}
};

// The complement of the staircase region is unbounded.
struct NotCoFiniteError : Error {
  explicit NotCoFiniteError(const std::string& what) : Error(what) {}
};

// Operation only implemented for small ambient dimension.
struct UnsupportedDimensionError : Error {
  explicit UnsupportedDimensionError(const std::string& what) : Error(what) {}
};

// A monomial ideal is not primary to the maximal ideal.
struct NotPrimaryError : Error {
  explicit NotPrimaryError(const std::string& what) : Error(what) {}
};

// Truncated colength did not stabilize within the configured budget;
// the input is either not m-primary or needs a larger truncation cap.
struct NotPrimaryOrBudgetError : Error {
  explicit NotPrimaryOrBudgetError(const std::string& what) : Error(what) {}
};

// Power/finite-difference budget exhausted before the answer settled.
struct BudgetExceededError : Error {
  explicit BudgetExceededError(const std::string& what) : Error(what) {}
};

// A face of the wrong kind (e.g. a vertex where an edge is required).
struct FaceKindError : Error {
  explicit FaceKindError(const std::string& what) : Error(what) {}
};

// Malformed input document.
struct ParseError : Error {
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

}  // namespace newton

#endif
