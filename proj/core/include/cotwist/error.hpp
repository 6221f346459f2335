#pragma once

#include <stdexcept>
#include <string>

namespace cotwist {

/// Raised when an input violates a documented precondition: rank or shape
/// mismatches, malformed literals, invariant violations of constructed
/// values. The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A malformed textual literal (unit, polynomial, element).
class ParseError : public InputError {
 public:
  explicit ParseError(const std::string& what) : InputError(what) {}
};

}  // namespace cotwist
