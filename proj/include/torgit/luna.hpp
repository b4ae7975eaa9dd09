#pragma once

#include "torgit/desing.hpp"
#include "torgit/stabilizer.hpp"

namespace torgit {

struct LunaSlice {
    TorusAction action;  // the identity component of the stabilizer acting on N_x
    IntMatrix stabilizer_cocharacters;        // r x k lattice basis of the stabilizer's cocharacters
    std::vector<std::size_t> kept_coordinates;  // ambient coordinate of each slice coordinate
    std::vector<std::size_t> orbit_coordinates;
};

/// Slice at the point with support s. Orbit directions are a maximal independent set
/// of coordinates in s (earliest first) plus one coordinate per extra orbit weight,
/// matched on restricted weights. Throws InternalError if an extra weight is missing.
LunaSlice slice_at_fixed_point(const TorusAction& a, Support s, const std::vector<Character>& extra_orbit_weights = {});

/// Chart of P(Sym^3) at x0 x1 x2 under the maximal torus of GL_3: the nine monomials
/// x^e != x0 x1 x2 with weights e - (1,1,1), ordered by e descending.
TorusAction cubic_forms_chart();
std::vector<IntVector> cubic_forms_chart_exponents();
/// Weights of the orbit directions x_i^2 x_j / x0 x1 x2.
std::vector<Character> cubic_forms_orbit_weights();

struct CubicsCertificate {
    LunaSlice slice;                // rank 3, the cubes x_i^3 with the S_3 permutation part
    EffectiveAction effective;      // rank 2
    EBPresentation eb;              // at the origin of A^3
    Support dm_support = 0;         // {X_1, X_2, X_3}
    DiagonalizableGroup stabilizer;
    std::vector<IntVector> invariants;  // Hilbert basis of the slice, degree <= 6
    DesingTower tower;
    bool dm_support_saturated = false;
};

CubicsCertificate cubics_example();

}  // namespace torgit
