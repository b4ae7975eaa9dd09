#pragma once

#include "torgit/int_matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace torgit {

/// Set of coordinate indices (0-based) as a bitmask; N <= 64.
using Support = std::uint64_t;

inline constexpr std::size_t kMaxCoordinates = 64;

namespace supports {

inline bool contains(Support s, std::size_t j) { return (s >> j) & 1u; }
inline Support with(Support s, std::size_t j) { return s | (Support{1} << j); }
inline Support without(Support s, std::size_t j) { return s & ~(Support{1} << j); }
inline Support full(std::size_t n) { return n >= 64 ? ~Support{0} : (Support{1} << n) - 1; }
inline bool is_subset(Support a, Support b) { return (a & ~b) == 0; }
std::size_t size(Support s);
std::vector<std::size_t> indices(Support s);
Support from_indices(const std::vector<std::size_t>& idx);
/// "{1,3}" with 1-based indices.
std::string to_string(Support s);

}  // namespace supports

template <class Tag>
struct LatticeVector {
    IntVector entries;

    LatticeVector() = default;
    explicit LatticeVector(IntVector v) : entries(std::move(v)) {}
    LatticeVector(std::initializer_list<long> v) : entries(v.begin(), v.end()) {}

    std::size_t size() const { return entries.size(); }
    const Integer& operator[](std::size_t i) const { return entries[i]; }
    Integer& operator[](std::size_t i) { return entries[i]; }
    bool operator==(const LatticeVector&) const = default;
    bool is_zero() const { return torgit::is_zero(entries); }
};

using Character = LatticeVector<struct CharacterTag>;
using Cocharacter = LatticeVector<struct CocharacterTag>;

/// The canonical pairing X(T)^* x X(T) -> Z.
Integer pairing(const Cocharacter& lam, const Character& chi);

Character operator*(const Integer& k, const Character& chi);
Character operator+(const Character& a, const Character& b);
Character operator-(const Character& chi);

/// A coordinate permutation together with the torus automorphism it covers:
/// aut * chi_j == chi_{perm[j]}.
struct FinitePartElement {
    std::vector<std::size_t> perm;
    IntMatrix aut;

    bool operator==(const FinitePartElement&) const = default;
};

FinitePartElement compose(const FinitePartElement& outer, const FinitePartElement& inner);
Support apply(const FinitePartElement& g, Support s);

/// Rank-r torus acting diagonally on A^N; column j of weights is chi_j.
class TorusAction {
public:
    TorusAction() = default;
    /// Validates every invariant; throws InputError on violation.
    TorusAction(IntMatrix weights, IntMatrix norm_form, std::vector<FinitePartElement> finite_part = {});
    /// Identity norm form, no finite part.
    explicit TorusAction(IntMatrix weights);

    std::size_t rank() const { return weights_.rows(); }
    std::size_t dim() const { return weights_.cols(); }
    const IntMatrix& weights() const { return weights_; }
    const IntMatrix& norm_form() const { return norm_form_; }
    const std::vector<FinitePartElement>& finite_part() const { return finite_part_; }

    Character weight(std::size_t j) const { return Character(weights_.column(j)); }
    /// Columns of the weight matrix indexed by s.
    IntMatrix restricted_weights(Support s) const;

    void check_support(Support s) const;
    /// Throws InputError unless chi has length r and is fixed by every automorphism.
    void check_invariant_character(const Character& chi) const;

    bool operator==(const TorusAction&) const = default;

private:
    IntMatrix weights_;
    IntMatrix norm_form_;
    std::vector<FinitePartElement> finite_part_;
};

/// All elements of the group generated by the finite part (identity included).
std::vector<FinitePartElement> finite_group_closure(const TorusAction& a);

}  // namespace torgit
