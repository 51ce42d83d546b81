// checked.hpp
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jaco {

using Count = std::uint64_t;

/// Argument outside the domain of an operation (vertex 0, empty range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operation invoked on an object that is not ready for it.
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A mathematical identity the engine relies on did not hold. Never swallowed.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic result does not fit in Count.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline Count checked_add(Count a, Count b, const char* what = "addition") {
  Count r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError(std::string("overflow in ") + what);
  }
  return r;
}

inline Count checked_sub(Count a, Count b, const char* what = "subtraction") {
  Count r = 0;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError(std::string("underflow in ") + what);
  }
  return r;
}

inline Count checked_mul(Count a, Count b, const char* what = "multiplication") {
  Count r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError(std::string("overflow in ") + what);
  }
  return r;
}

/// m(m+1)/2, overflow-checked.
inline Count triangular(Count m) {
  return (m % 2 == 0) ? checked_mul(m / 2, checked_add(m, 1), "triangular number")
                      : checked_mul(m, (m + 1) / 2, "triangular number");
}

}  // namespace jaco
