#pragma once

#include <vector>

#include "orthopack/certificate.hpp"
#include "orthopack/vector.hpp"
#include "orthopack/witness.hpp"

namespace orthopack {

// The unit cube's exponential e_lambda and e_mu are orthogonal exactly when
// lambda - mu has some nonzero integer coordinate; in_zero_set tests that
// condition on a difference vector.
bool in_zero_set(const Vector& xi);

bool orthogonal(const Vector& a, const Vector& b);

// Checks all pairs; Fail carries indices {i, j} and the difference vector.
Certificate pairwise_orthogonal(const std::vector<Vector>& pts);

// Cube packing: every pairwise difference must leave the open cube (-1,1)^d,
// i.e. some coordinate difference has absolute value >= 1. Symbol-bearing
// coordinates are decided under the witness; Undecidable propagates.
Certificate is_packing(const std::vector<Vector>& pts, const SymbolWitness& w);

}  // namespace orthopack
