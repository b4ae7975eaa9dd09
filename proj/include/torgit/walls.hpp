#pragma once

#include "torgit/support_scan.hpp"
#include "torgit/torus_action.hpp"

#include <optional>

namespace torgit {

/// Preimages under psi of the hyperplanes of X(T)_Q spanned by weight
/// subsets of rank r-1, stored as primitive normals in X(G_m^n).
struct WallArrangement {
    std::size_t ambient_rank = 0;  // n
    IntMatrix psi;                 // r x n
    std::vector<IntVector> walls;  // first nonzero entry positive, sorted, distinct
};

WallArrangement compute_walls(const TorusAction& a, const IntMatrix& psi);

bool is_generic(const WallArrangement& w, const Character& mu);

/// Character of T induced by mu in X(G_m^n).
Character pull_back(const WallArrangement& w, const Character& mu);

/// Least integer vector of height <= bound off every wall, ordered by height,
/// then lexicographically with 0 < 1 < -1 < 2 < -2 < ... in each coordinate.
/// Throws ComputationDeclined when the search is exhausted.
Character find_generic_character(const WallArrangement& w, std::size_t height_bound);

struct ChamberCheck {
    bool ss_equals_s = true;
    std::optional<Support> counterexample;  // semistable but not stable
};

/// Scans all 2^N supports; the counterexample reported is the first in
/// order of decreasing cardinality, then lexicographic index lists.
ChamberCheck verify_ss_equals_s(const TorusAction& a, const Character& mu_pulled, const ScanOptions& opts = {});

/// chi lies on one of the lines Q * chi_j through a weight.
bool on_weight_line(const TorusAction& a, const Character& chi);

}  // namespace torgit
