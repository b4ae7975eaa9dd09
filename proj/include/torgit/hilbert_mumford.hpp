#pragma once

#include "torgit/cone.hpp"
#include "torgit/support_scan.hpp"
#include "torgit/torus_action.hpp"

#include <compare>
#include <optional>
#include <set>

namespace torgit {

// Sign convention: mu^chi(lam) = -<lam, chi>. A support s is chi-semistable
// iff <lam, chi> <= 0 for every lam in its limit cone.

/// {lam : <lam, chi_j> >= 0 for all j in s}.
RationalCone limit_cone(const TorusAction& a, Support s);

/// mu^chi(lam) = -<lam, chi>.
Rational hm_pairing(const TorusAction& a, const Character& chi, const Cocharacter& lam);

bool is_semistable(const TorusAction& a, const Character& chi, Support s);
bool is_stable(const TorusAction& a, const Character& chi, Support s);

/// A cocharacter in the limit cone with <lam, chi> > 0, if any.
std::optional<Cocharacter> destabilizing_cocharacter(const TorusAction& a, const Character& chi, Support s);

/// s lies in X^c: some lam in the limit cone has <lam, chi_j> > 0 for a j in s.
bool orbit_degenerates(const TorusAction& a, Support s);

/// A real number sign * sqrt(square), compared exactly.
struct SignedSquare {
    int sign = 0;
    Rational square = 0;

    static SignedSquare from(int sign, Rational square);
    SignedSquare operator-() const { return {-sign, square}; }
    bool operator==(const SignedSquare& o) const { return sign == o.sign && square == o.square; }
    std::strong_ordering operator<=>(const SignedSquare& o) const;
};

std::string to_string(const SignedSquare& v);

struct HmMinimum {
    SignedSquare value;     // min over nonzero lam in the cone of mu^chi(lam) / |lam|_Q
    Cocharacter minimizer;  // primitive
};

/// nullopt iff the limit cone is {0}.
std::optional<HmMinimum> normalized_hm_min(const TorusAction& a, const Character& chi, Support s);

std::set<SignedSquare> minimal_hm_values(const TorusAction& a, const Character& chi, const ScanOptions& opts = {});

struct CombinedLinearization {
    Integer m0;
    Character combined;
    std::optional<SignedSquare> d;  // unset when no unstable support exists
    std::optional<SignedSquare> e;
};

/// m0 = least positive integer with m0 * d + e < 0, combined = m0 * chi_L + chi_M.
/// d, e range over every chi_L-unstable support, the empty support included.
CombinedLinearization combine_linearizations(const TorusAction& a, const Character& chi_L, const Character& chi_M,
                                             const ScanOptions& opts = {});

/// Supports semistable for chi_L on which every lam of the limit cone with
/// <lam, chi_L> == 0 has <lam, chi_M> <= 0.
bool in_two_step_locus(const TorusAction& a, const Character& chi_L, const Character& chi_M, Support s);

std::vector<Support> semistable_supports(const TorusAction& a, const Character& chi, const ScanOptions& opts = {});
std::vector<Support> stable_supports(const TorusAction& a, const Character& chi, const ScanOptions& opts = {});

}  // namespace torgit
