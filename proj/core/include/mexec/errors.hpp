#pragma once

#include <stdexcept>
#include <string>

namespace mexec {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed descriptors, labels or labeled-set literals.
class ParseError : public Error {
public:
  using Error::Error;
};

// A label outside a lattice carrier, mismatched lattices, or a
// construction whose preconditions do not hold (e.g. specify without top).
class DomainError : public Error {
public:
  using Error::Error;
};

// A request refused because it would exceed a configured safety limit.
// Carries the limit so callers can report it.
class LimitError : public Error {
public:
  LimitError(const std::string& what, std::size_t limit)
      : Error(what), limit_(limit) {}
  std::size_t limit() const { return limit_; }

private:
  std::size_t limit_;
};

// An internal invariant failed (unsound generator, violated precondition
// in validation mode, nondeterministic count). CLI maps this to exit 3.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace mexec
