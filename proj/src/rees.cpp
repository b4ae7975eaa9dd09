#include "torgit/rees.hpp"

#include "torgit/errors.hpp"
#include "torgit/hilbert_mumford.hpp"

#include <algorithm>

namespace torgit {

Support MonomialWeightedCenter::support() const { return supports::from_indices(coords); }

Integer MonomialWeightedCenter::weight_of(std::size_t j) const {
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] == j) return weights[i];
    return 0;
}

void MonomialWeightedCenter::validate(std::size_t n) const {
    if (coords.empty()) throw InputError("center must be nonempty");
    if (coords.size() != weights.size()) throw InputError("center needs one weight per coordinate");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] >= n) throw InputError("center coordinate out of range");
        if (i > 0 && coords[i] <= coords[i - 1]) throw InputError("center coordinates must be sorted and distinct");
        if (weights[i] < 1) throw InputError("center weights must be >= 1");
    }
}

MonomialWeightedCenter reduced_center(Support z) {
    MonomialWeightedCenter c;
    c.coords = supports::indices(z);
    c.weights.assign(c.coords.size(), Integer(1));
    return c;
}

std::vector<IntVector> ideal_generators(const MonomialWeightedCenter& c, const Integer& n) {
    const std::size_t k = c.coords.size();
    if (n <= 0) return {IntVector(k, Integer(0))};
    std::vector<IntVector> out;
    IntVector b(k, Integer(0));
    auto visit = [&](auto& self, std::size_t i, const Integer& deg) -> void {
        if (i == k) {
            if (deg < n) return;
            for (std::size_t j = 0; j < k; ++j)
                if (b[j] > 0 && deg - c.weights[j] >= n) return;
            out.push_back(b);
            return;
        }
        Integer cap = (n + c.weights[i] - 1) / c.weights[i];
        for (Integer e = 0; e <= cap; ++e) {
            b[i] = e;
            self(self, i + 1, deg + e * c.weights[i]);
        }
        b[i] = 0;
    };
    visit(visit, 0, Integer(0));
    return out;
}

namespace {

Integer weighted_degree(const MonomialWeightedCenter& c, const IntVector& b) {
    Integer d = 0;
    for (std::size_t j = 0; j < b.size(); ++j) d += c.weights[j] * b[j];
    return d;
}

// m lies in I_i * I_{n-i} for some 1 <= i < n.
bool splits(const MonomialWeightedCenter& c, const IntVector& m, const Integer& n) {
    const Integer total = weighted_degree(c, m);
    IntVector part(m.size(), Integer(0));
    bool found = false;
    auto visit = [&](auto& self, std::size_t j) -> void {
        if (found) return;
        if (j == m.size()) {
            Integer d1 = weighted_degree(c, part);
            Integer lo = std::max(Integer(1), Integer(n - (total - d1)));
            Integer hi = std::min(Integer(n - 1), d1);
            if (lo <= hi) found = true;
            return;
        }
        for (Integer e = 0; e <= m[j]; ++e) {
            part[j] = e;
            self(self, j + 1);
        }
        part[j] = 0;
    };
    visit(visit, 0);
    return found;
}

}  // namespace

bool is_weighted_ideal_sequence(const MonomialWeightedCenter& c, const Integer& d, std::size_t n_bound) {
    std::vector<std::vector<IntVector>> gens(n_bound + 1);
    for (std::size_t n = 1; n <= n_bound; ++n) gens[n] = ideal_generators(c, Integer(n));
    for (std::size_t n = 1; n <= n_bound; ++n)
        for (std::size_t m = 1; n + m <= n_bound; ++m)
            for (const auto& g : gens[n])
                for (const auto& h : gens[m]) {
                    IntVector p(g.size());
                    for (std::size_t j = 0; j < g.size(); ++j) p[j] = g[j] + h[j];
                    if (weighted_degree(c, p) < Integer(n + m)) return false;
                }
    for (std::size_t n = 1; n <= n_bound; ++n) {
        if (Integer(n) <= d) continue;
        for (const auto& g : gens[n])
            if (!splits(c, g, Integer(n))) return false;
    }
    return true;
}

IntVector EBPresentation::substitute(const IntVector& source_exponents) const {
    if (source_exponents.size() != source.dim()) throw InputError("exponent vector length differs from N");
    IntVector out = source_exponents;
    Integer t = 0;
    for (std::size_t k = 0; k < source_exponents.size(); ++k) t += t_exponent(k) * source_exponents[k];
    out.push_back(t);
    return out;
}

Support EBPresentation::section(Support source_support) const {
    source.check_support(source_support);
    return source_support | exceptional_support();
}

Support EBPresentation::project(Support ambient_support) const {
    ambient.check_support(ambient_support);
    Support s = ambient_support & ~exceptional_support();
    if (!(ambient_support & exceptional_support())) s &= ~center_support();
    return s;
}

Character EBPresentation::extend(const Character& chi) const {
    source.check_invariant_character(chi);
    IntVector v = chi.entries;
    v.push_back(0);
    return Character(std::move(v));
}

EBPresentation extended_weighted_blowup(const TorusAction& a, const MonomialWeightedCenter& c) {
    const std::size_t r = a.rank(), n = a.dim();
    c.validate(n);
    if (n + 1 > kMaxCoordinates) throw InputError("too many coordinates for the blow-up ambient");
    for (const auto& g : finite_group_closure(a))
        for (std::size_t j = 0; j < n; ++j)
            if (c.weight_of(g.perm[j]) != c.weight_of(j))
                throw InputError("finite part does not preserve the center and its weights");

    IntMatrix w(r + 1, n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < r; ++i) w(i, j) = a.weights()(i, j);
        w(r, j) = c.weight_of(j);
    }
    w(r, n) = -1;
    IntMatrix q(r + 1, r + 1);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) q(i, j) = a.norm_form()(i, j);
    q(r, r) = 1;
    std::vector<FinitePartElement> finite;
    for (const auto& g : a.finite_part()) {
        IntMatrix aut(r + 1, r + 1);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) aut(i, j) = g.aut(i, j);
        aut(r, r) = 1;
        auto perm = g.perm;
        perm.push_back(n);
        finite.push_back({std::move(perm), std::move(aut)});
    }

    EBPresentation eb;
    eb.source = a;
    eb.center = c;
    eb.ambient = TorusAction(std::move(w), std::move(q), std::move(finite));
    IntVector theta(r + 1, Integer(0));
    theta[r] = -1;
    eb.theta = Character(std::move(theta));
    eb.exceptional_index = n;
    return eb;
}

bool is_relatively_semistable(const EBPresentation& eb, const Character& theta, Support s) {
    eb.ambient.check_invariant_character(theta);
    const std::size_t r = eb.source.rank();
    ConeQuery q;
    q.positive.push_back(theta.entries);
    for (std::size_t i = 0; i < r; ++i) {
        IntVector e(r + 1, Integer(0));
        e[i] = 1;
        q.zero.push_back(std::move(e));
    }
    return !find_cone_point(limit_cone(eb.ambient, s), q).has_value();
}

std::vector<Support> weighted_blowup_locus(const EBPresentation& eb, const ScanOptions& opts) {
    return filter_supports(
        eb.ambient.dim(), [&](Support s) { return is_relatively_semistable(eb, eb.theta, s); }, opts);
}

std::vector<Support> saturated_locus(const EBPresentation& eb, const ScanOptions& opts) {
    return semistable_supports(eb.ambient, eb.theta, opts);
}

ExceptionalDivisor exceptional_divisor(const EBPresentation& eb, const ScanOptions& opts) {
    check_scan_size(eb.ambient.dim(), opts);
    ExceptionalDivisor out;
    const Support t = eb.exceptional_support();
    const Support z = eb.center_support();
    for (Support s = 0; s < (Support{1} << eb.ambient.dim()); ++s) {
        if (s & t) continue;
        out.on_divisor.push_back(s);
        if (s & z) out.blowup_on_divisor.push_back(s);
    }
    return out;
}

}  // namespace torgit
