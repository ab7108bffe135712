#pragma once

#include <optional>

#include "specsplit/frobenius.hpp"
#include "specsplit/matrix.hpp"

namespace specsplit {

// Exhaustive search over all bijections, lexicographically; first hit wins.
// Guarded at n <= 10.
std::optional<Permutation> brute_force_iso(const DenseSymMatrix& a0,
                                           const DenseSymMatrix& b0);

// Exhaustive search over all (row, column) permutation pairs; n <= 6.
std::optional<FrobeniusSolution> brute_force_frobenius(const DenseMatrix& fa,
                                                       const DenseMatrix& fb);

}  // namespace specsplit
