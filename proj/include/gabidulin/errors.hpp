#pragma once

#include <stdexcept>
#include <string>

namespace gabidulin {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A modulus turned out to be reducible (failed inversion or failed irreducibility test).
struct ReducibleModulus : Error {
  using Error::Error;
};

/// Proposed generator image is not a root of the top modulus.
struct NotAutomorphism : Error {
  using Error::Error;
};

/// A nonzero skew polynomial has more independent roots than its degree.
struct HdimViolation : Error {
  using Error::Error;
};

/// Code parameters violate a construction precondition.
struct InvalidCode : Error {
  using Error::Error;
};

/// A decoder postcondition or loop invariant failed.
struct ContractViolation : Error {
  using Error::Error;
};

/// Exhaustive enumeration would exceed its configured budget.
struct GuardExceeded : Error {
  using Error::Error;
};

/// Reduction modulo a prime or lifting back failed.
struct ReductionError : Error {
  using Error::Error;
};

}  // namespace gabidulin
