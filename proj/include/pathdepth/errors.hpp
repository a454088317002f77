#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathdepth {

// Two monomials (or ideals) living in polynomial rings of different sizes.
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("ambient variable counts differ: " +
                              std::to_string(lhs) + " vs " +
                              std::to_string(rhs)) {}
};

// An argument outside the domain an operation is defined on (t out of range,
// an index outside [n], a malformed weight vector, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exponent arithmetic left the representable range.
class ExponentOverflow : public std::overflow_error {
 public:
  ExponentOverflow() : std::overflow_error("monomial exponent overflow") {}
};

}  // namespace pathdepth
