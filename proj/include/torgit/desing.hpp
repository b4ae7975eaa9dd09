#pragma once

#include "torgit/hilbert_mumford.hpp"
#include "torgit/rees.hpp"

#include <optional>
#include <string>

namespace torgit {

std::size_t stabilizer_dimension(const TorusAction& a, Support s);

/// Reduced centers V(x_j : j in Z) for the inclusion-maximal live supports of
/// maximal stabilizer dimension (Z = complement), sorted lexicographically on Z.
/// Empty when every live support has a finite stabilizer.
std::vector<MonomialWeightedCenter> max_stabilizer_centers(const TorusAction& a,
                                                           const std::vector<Support>& live_supports);

struct DesingStep {
    EBPresentation eb;
    Character source_character;  // accumulated character before the step
    CombinedLinearization combination;  // m0 * (chi, 0) + theta
    std::size_t max_stabilizer_dim = 0;
    std::size_t center_count = 0;
};

struct DesingTower {
    TorusAction base;
    Character start_character;
    std::vector<DesingStep> steps;
    Character final_character;
    TorusAction final_action;
    std::vector<Support> final_dm_supports;

    /// T_1 = ... = T_k = 1: base support -> final ambient support.
    Support composite_section(Support base_support) const;
};

struct DesingOptions {
    std::size_t max_steps = 32;
    ScanOptions scan;
};

/// Throws InputError when the start character has no semistable support. A step may
/// leave no semistable support at all; the tower then ends with an empty DM locus.
DesingTower desingularize(const TorusAction& a, const Character& start_character, const DesingOptions& opts = {});

struct TowerCheck {
    std::string name;
    std::optional<std::size_t> step;  // 0-based; unset for whole-tower checks
    bool passed = true;
    std::string detail;
};

struct TowerReport {
    std::vector<TowerCheck> checks;
    bool passed() const;
    const TowerCheck* first_failure() const;
};

TowerReport verify_tower(const DesingTower& t, const ScanOptions& opts = {});

}  // namespace torgit
