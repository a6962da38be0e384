#pragma once

#include <stdexcept>

namespace uif {

// Enumeration target exceeds a configured size cap (ground set > 64,
// too many Kneser vertices, ...).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A theorem's stated precondition fails on otherwise well-formed input
// (density too low for a recursion level, covering number too small, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uif
