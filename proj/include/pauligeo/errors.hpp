#pragma once

#include <stdexcept>
#include <string>

namespace pauligeo {

// Caller passed something outside an operation's domain (wrong length,
// malformed token, unknown name).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Geometrically degenerate input, e.g. a line through a point and itself.
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The identity word / zero vector used where a projective point is required.
class IdentityNotAPoint : public std::invalid_argument {
 public:
  IdentityNotAPoint() : std::invalid_argument("identity is not a point of the projective space") {}
};

// A structural property that must always hold was violated. Seeing one of
// these means a bug in this library, not bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pauligeo
