#pragma once

#include "torgit/support_scan.hpp"
#include "torgit/torus_action.hpp"

namespace torgit {

/// I_n = (monomials in x_j, j in coords, of weighted degree >= n).
struct MonomialWeightedCenter {
    std::vector<std::size_t> coords;  // sorted, distinct, 0-based
    IntVector weights;                // a_j >= 1, aligned with coords

    Support support() const;
    Integer weight_of(std::size_t j) const;  // 0 outside the center
    void validate(std::size_t n) const;
};

/// Center with every weight 1.
MonomialWeightedCenter reduced_center(Support z);

/// Minimal monomial generators of I_n, as exponent vectors over the center coordinates.
std::vector<IntVector> ideal_generators(const MonomialWeightedCenter& c, const Integer& n);

/// Checks I_n I_m in I_{n+m} and generation in degrees <= d for all 1 <= n, m <= n_bound.
bool is_weighted_ideal_sequence(const MonomialWeightedCenter& c, const Integer& d, std::size_t n_bound);

/// Graded presentation [Spec A / (T x G_m)] of the extended weighted blow-up.
/// Coordinate k of the source keeps index k (X_k for k in the center, x_k otherwise);
/// T has index N.
struct EBPresentation {
    TorusAction source;
    MonomialWeightedCenter center;
    TorusAction ambient;  // rank r+1 on N+1 coordinates
    Character theta;      // the Rees G_m character t -> t^{-1}: (0,...,0,-1)
    std::size_t exceptional_index = 0;

    /// Exponent of T in the image of x_k: a_k on the center, 0 elsewhere.
    Integer t_exponent(std::size_t k) const { return center.weight_of(k); }
    /// Image of the source monomial x^b: exponents of (X, x, T).
    IntVector substitute(const IntVector& source_exponents) const;
    /// T = 1 section: s -> s + {T}.
    Support section(Support source_support) const;
    /// pi on supports.
    Support project(Support ambient_support) const;
    /// (chi, 0).
    Character extend(const Character& chi) const;
    Support exceptional_support() const { return Support{1} << exceptional_index; }
    Support center_support() const { return center.support(); }
};

EBPresentation extended_weighted_blowup(const TorusAction& a, const MonomialWeightedCenter& c);

/// Supports meeting {X_j : j in the center}.
std::vector<Support> weighted_blowup_locus(const EBPresentation& eb, const ScanOptions& opts = {});

/// theta-semistability tested only against the Rees cocharacters (relative over the source).
bool is_relatively_semistable(const EBPresentation& eb, const Character& theta, Support s);

/// Supports with no lam in the limit cone having <lam, theta> > 0.
std::vector<Support> saturated_locus(const EBPresentation& eb, const ScanOptions& opts = {});

struct ExceptionalDivisor {
    std::vector<Support> on_divisor;          // supports omitting T
    std::vector<Support> blowup_on_divisor;   // weighted blow-up locus restricted to V(T)
};

ExceptionalDivisor exceptional_divisor(const EBPresentation& eb, const ScanOptions& opts = {});

}  // namespace torgit
