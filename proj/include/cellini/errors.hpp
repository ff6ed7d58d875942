#pragma once

#include <stdexcept>
#include <string>

namespace cellini {

/// Input is larger than the exhaustive-enumeration limits allow.
class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A mathematical invariant that must hold by construction was violated.
/// Raised instead of silently repairing results (count mismatches,
/// ties among shortest elements, corrupt factorizations).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cellini
