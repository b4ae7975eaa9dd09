#pragma once

#include "torgit/arith.hpp"

#include <optional>
#include <vector>

namespace torgit {

/// {x : <x, n_k> >= 0 for every inequality n_k}. Never empty.
struct RationalCone {
    std::size_t ambient_dim = 0;
    std::vector<IntVector> inequalities;

    explicit RationalCone(std::size_t dim = 0) : ambient_dim(dim) {}
    RationalCone(std::size_t dim, std::vector<IntVector> ineqs);

    void add(IntVector normal);
    bool contains(const IntVector& x) const;
};

enum class Strictness { Positive, NonNegative };

/// Extra conditions imposed on a point of a cone.
struct ConeQuery {
    std::vector<IntVector> positive;     // <x, v> > 0
    std::vector<IntVector> nonnegative;  // <x, v> >= 0
    std::vector<IntVector> zero;         // <x, v> == 0
    bool exclude_zero = false;           // x != 0
};

/// A primitive integer point of the cone satisfying the query, if any.
/// Exact: Fourier-Motzkin elimination over the rationals.
std::optional<IntVector> find_cone_point(const RationalCone& cone, const ConeQuery& query);

bool cone_has_point_with(const RationalCone& cone, const IntVector& objective,
                         Strictness strictness, bool exclude_zero);

/// True iff the cone is {0}.
bool cone_is_trivial(const RationalCone& cone);

/// Affine inequality <coeffs, x> >= rhs.
struct AffineInequality {
    RatVector coeffs;
    Rational rhs;
};

/// A rational point satisfying every inequality, or nullopt. Back-substitution
/// picks 0 whenever allowed, else the integer nearest to 0 inside the bounds.
std::optional<RatVector> solve_affine_system(std::vector<AffineInequality> system, std::size_t dim);

}  // namespace torgit
