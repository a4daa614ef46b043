#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orthopack {

struct OrthopackError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : OrthopackError {
  using OrthopackError::OrthopackError;
};

struct UnknownSymbol : OrthopackError {
  using OrthopackError::OrthopackError;
};

// Raised when the maximality engine meets a family variant it has no exact rule for.
struct UnsupportedFamily : OrthopackError {
  using OrthopackError::OrthopackError;
};

struct BranchLimitExceeded : OrthopackError {
  std::uint64_t explored;
  explicit BranchLimitExceeded(std::uint64_t n)
      : OrthopackError("branch limit exceeded after " + std::to_string(n) + " nodes"),
        explored(n) {}
};

struct NotOrthogonal : OrthopackError {
  using OrthopackError::OrthopackError;
};

// Exhaustive scans refuse to run past their configured budget.
struct BoundExceeded : OrthopackError {
  using OrthopackError::OrthopackError;
};

struct ValidationError : OrthopackError {
  using OrthopackError::OrthopackError;
};

// Input outside a formula's domain of definition (e.g. a removable or genuine
// singularity of a closed-form expression).
struct DomainError : OrthopackError {
  using OrthopackError::OrthopackError;
};

}  // namespace orthopack
