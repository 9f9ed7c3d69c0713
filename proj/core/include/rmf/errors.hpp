#pragma once

#include <stdexcept>
#include <string>

namespace rmf {

// Operands are structurally incompatible: mismatched variable sets,
// truncation orders, matrix shapes, tensor ranks.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A value lies outside an operation's domain: zero denominator, invalid
// algebra parameters, out-of-range indices.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal certificate failed: an identity that must hold exactly does
// not, a solve came out degenerate, a series did not terminate.  Any
// IntegrityError means a wrong result would otherwise have been produced;
// it is never downgraded to a warning.
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rmf
