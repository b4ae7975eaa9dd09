#pragma once

#include "torgit/torus_action.hpp"

#include <optional>

namespace torgit {

/// Diagonalizable group G_m^dimension x (+) Z/d_i, extended by a finite
/// permutation part of the given order.
struct DiagonalizableGroup {
    std::size_t dimension = 0;
    IntVector invariant_factors;  // each > 1, d_i | d_{i+1}
    std::size_t finite_part_order = 1;

    Integer torus_part_order() const;  // product of invariant factors (finite only when dimension == 0)
    bool is_finite() const { return dimension == 0; }
    bool operator==(const DiagonalizableGroup&) const = default;
};

DiagonalizableGroup stabilizer(const TorusAction& a, Support s);

/// The action of T / ker on the same coordinates.
struct EffectiveAction {
    TorusAction action;
    IntMatrix character_basis;  // r x k: old chi = character_basis * new chi
    IntMatrix to_effective;     // k x r: new chi = to_effective * old chi for chi in the span
    std::vector<IntVector> kernel_cocharacters;  // basis of the quotiented subtorus (rational)

    /// nullopt when chi does not vanish on the kernel.
    std::optional<Character> transport(const Character& chi) const;
};

EffectiveAction effectivize(const TorusAction& a);

/// Linear action on P^{N-1} linearized by O(d) twisted by a character,
/// realized as the affine cone action of T x G_m.
struct ConeAction {
    TorusAction action;
    Character character;
};

ConeAction cone_over_projective(const TorusAction& a, const Character& linearization_twist, const Integer& d);

}  // namespace torgit
