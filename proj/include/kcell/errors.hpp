#pragma once

#include <stdexcept>
#include <string>

namespace kcell {

/* Error taxonomy mirrors the CLI exit-code contract:
   usage or malformed input -> 1, verification failure -> 2,
   broken internal invariant -> 3. */

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed datum text, bad matrices, weights of the wrong rank, ...
struct ParseError : UsageError {
  using UsageError::UsageError;
};

// a weight that had to be dominant was not
struct NotDominant : UsageError {
  using UsageError::UsageError;
};

// not dominant for the sub-root-system of a Levi restriction
struct NotDominantForLevi : UsageError {
  using UsageError::UsageError;
};

// a checked mathematical identity failed on actual data
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// states the code must never reach; always a bug
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact division requested for a non-divisible pair
struct NotDivisible : InternalError {
  using InternalError::InternalError;
};

// a character decomposition produced a negative multiplicity
struct NegativeMultiplicity : InternalError {
  using InternalError::InternalError;
};

}  // namespace kcell
