#include "torgit/torus_action.hpp"

#include "torgit/errors.hpp"

#include <algorithm>
#include <bit>

namespace torgit {

namespace supports {

std::size_t size(Support s) { return static_cast<std::size_t>(std::popcount(s)); }

std::vector<std::size_t> indices(Support s) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; s; ++j, s >>= 1)
        if (s & 1u) out.push_back(j);
    return out;
}

Support from_indices(const std::vector<std::size_t>& idx) {
    Support s = 0;
    for (auto j : idx) {
        if (j >= kMaxCoordinates) throw InputError("coordinate index out of range");
        s = with(s, j);
    }
    return s;
}

std::string to_string(Support s) {
    std::string out = "{";
    bool first = true;
    for (auto j : indices(s)) {
        if (!first) out += ",";
        out += std::to_string(j + 1);
        first = false;
    }
    return out + "}";
}

}  // namespace supports

Integer pairing(const Cocharacter& lam, const Character& chi) {
    if (lam.size() != chi.size()) throw InputError("pairing of vectors with different ranks");
    return dot(lam.entries, chi.entries);
}

Character operator*(const Integer& k, const Character& chi) {
    Character out = chi;
    for (auto& x : out.entries) x *= k;
    return out;
}

Character operator+(const Character& a, const Character& b) {
    if (a.size() != b.size()) throw InputError("sum of characters with different ranks");
    Character out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

Character operator-(const Character& chi) { return Integer(-1) * chi; }

FinitePartElement compose(const FinitePartElement& outer, const FinitePartElement& inner) {
    FinitePartElement g;
    g.perm.resize(inner.perm.size());
    for (std::size_t j = 0; j < inner.perm.size(); ++j) g.perm[j] = outer.perm[inner.perm[j]];
    g.aut = outer.aut * inner.aut;
    return g;
}

Support apply(const FinitePartElement& g, Support s) {
    Support out = 0;
    for (auto j : supports::indices(s)) out = supports::with(out, g.perm[j]);
    return out;
}

TorusAction::TorusAction(IntMatrix weights)
    : TorusAction(weights, IntMatrix::identity(weights.rows()), {}) {}

TorusAction::TorusAction(IntMatrix weights, IntMatrix norm_form, std::vector<FinitePartElement> finite_part)
    : weights_(std::move(weights)), norm_form_(std::move(norm_form)), finite_part_(std::move(finite_part)) {
    const std::size_t r = rank(), n = dim();
    if (n > kMaxCoordinates) throw InputError("at most 64 coordinates are supported");
    if (norm_form_.rows() != r || norm_form_.cols() != r) throw InputError("norm form must be r x r");
    if (!is_positive_definite(norm_form_)) throw InputError("norm form must be symmetric positive definite");
    for (const auto& g : finite_part_) {
        if (g.perm.size() != n) throw InputError("finite-part permutation has wrong length");
        std::vector<bool> seen(n, false);
        for (auto p : g.perm) {
            if (p >= n || seen[p]) throw InputError("finite-part entry is not a permutation");
            seen[p] = true;
        }
        if (g.aut.rows() != r || g.aut.cols() != r) throw InputError("torus automorphism must be r x r");
        if (r > 0 && !is_unimodular(g.aut)) throw InputError("torus automorphism must be unimodular");
        for (std::size_t j = 0; j < n; ++j)
            if (g.aut * weights_.column(j) != weights_.column(g.perm[j]))
                throw InputError("torus automorphism incompatible with the permutation of weights");
        // aut acts on characters; on cocharacters it acts by aut^{-T}
        if (g.aut * norm_form_ * g.aut.transpose() != norm_form_)
            throw InputError("torus automorphism does not preserve the norm form");
    }
}

IntMatrix TorusAction::restricted_weights(Support s) const {
    check_support(s);
    return weights_.select_columns(supports::indices(s));
}

void TorusAction::check_support(Support s) const {
    if (!supports::is_subset(s, supports::full(dim()))) throw InputError("support index out of range");
}

void TorusAction::check_invariant_character(const Character& chi) const {
    if (chi.size() != rank()) throw InputError("character length differs from torus rank");
    for (const auto& g : finite_part_)
        if (g.aut * chi.entries != chi.entries)
            throw InputError("character is not invariant under the finite part");
}

std::vector<FinitePartElement> finite_group_closure(const TorusAction& a) {
    constexpr std::size_t kLimit = 100000;
    std::vector<std::size_t> id_perm(a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) id_perm[j] = j;
    std::vector<FinitePartElement> group{{id_perm, IntMatrix::identity(a.rank())}};
    for (std::size_t k = 0; k < group.size(); ++k) {
        for (const auto& gen : a.finite_part()) {
            FinitePartElement h = compose(gen, group[k]);
            if (std::find(group.begin(), group.end(), h) == group.end()) {
                group.push_back(std::move(h));
                if (group.size() > kLimit) throw ComputationDeclined("finite part generates too large a group");
            }
        }
    }
    return group;
}

}  // namespace torgit
