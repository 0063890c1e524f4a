#pragma once

#include <stdexcept>
#include <string>

namespace circconj {

/// Input outside an operation's domain (rational where irrational is
/// required, mismatched quadratic fields, malformed descriptors).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact integer arithmetic left the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A floating evaluation came closer to a breakpoint than the working
/// precision can resolve.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Repeated composition would exceed the configured power cap.
class PowerCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace circconj
