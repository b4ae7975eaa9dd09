#pragma once

#include "torgit/int_matrix.hpp"

#include <vector>

namespace torgit {

/// Exponent vectors a in N^N with weights * a == 0 and 1 <= |a| <= degree_bound,
/// ordered by total degree, then lexicographically descending.
std::vector<IntVector> invariant_monomials(const IntMatrix& weights, std::size_t degree_bound);

/// Minimal generators (under coordinatewise order) of {a in N^N : weights * a == 0}
/// among vectors of total degree <= degree_bound.
std::vector<IntVector> hilbert_basis_bounded(const IntMatrix& weights, std::size_t degree_bound);

}  // namespace torgit
