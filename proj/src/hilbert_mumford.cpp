#include "torgit/hilbert_mumford.hpp"

#include "torgit/errors.hpp"

#include <algorithm>

namespace torgit {

RationalCone limit_cone(const TorusAction& a, Support s) {
    a.check_support(s);
    RationalCone cone(a.rank());
    for (auto j : supports::indices(s)) cone.add(a.weights().column(j));
    return cone;
}

Rational hm_pairing(const TorusAction& a, const Character& chi, const Cocharacter& lam) {
    if (chi.size() != a.rank() || lam.size() != a.rank()) throw InputError("vector length differs from torus rank");
    return Rational(-pairing(lam, chi));
}

std::optional<Cocharacter> destabilizing_cocharacter(const TorusAction& a, const Character& chi, Support s) {
    a.check_invariant_character(chi);
    ConeQuery q;
    q.positive.push_back(chi.entries);
    auto x = find_cone_point(limit_cone(a, s), q);
    if (!x) return std::nullopt;
    return Cocharacter(std::move(*x));
}

bool is_semistable(const TorusAction& a, const Character& chi, Support s) {
    return !destabilizing_cocharacter(a, chi, s).has_value();
}

bool is_stable(const TorusAction& a, const Character& chi, Support s) {
    a.check_invariant_character(chi);
    return !cone_has_point_with(limit_cone(a, s), chi.entries, Strictness::NonNegative, true);
}

bool orbit_degenerates(const TorusAction& a, Support s) {
    RationalCone cone = limit_cone(a, s);
    for (auto j : supports::indices(s)) {
        ConeQuery q;
        q.positive.push_back(a.weights().column(j));
        if (find_cone_point(cone, q)) return true;
    }
    return false;
}

SignedSquare SignedSquare::from(int sign, Rational square) {
    square.canonicalize();
    if (square < 0) throw InternalError("negative square");
    if (square == 0) sign = 0;
    if (sign == 0 && square != 0) throw InternalError("zero sign with nonzero square");
    return {sign > 0 ? 1 : (sign < 0 ? -1 : 0), std::move(square)};
}

std::strong_ordering SignedSquare::operator<=>(const SignedSquare& o) const {
    if (sign != o.sign) return sign <=> o.sign;
    int c = cmp(square, o.square);
    if (sign < 0) c = -c;
    return c <=> 0;
}

std::string to_string(const SignedSquare& v) {
    const char* s = v.sign > 0 ? "+" : (v.sign < 0 ? "-" : "0");
    return std::string(s) + " sqrt(" + to_string(v.square) + ")";
}

namespace {

struct Face {
    std::vector<IntVector> kernel;  // basis of the face's linear span
};

// Linear spans cut out by independent subsets of the normals with rank < r.
std::vector<Face> enumerate_face_spans(const std::vector<IntVector>& normals, std::size_t r) {
    std::set<std::vector<IntVector>> seen;
    std::vector<Face> faces;
    std::vector<IntVector> chosen;
    auto visit = [&](auto& self, std::size_t start) -> void {
        IntMatrix rows = IntMatrix::from_rows(chosen, r);
        auto kernel = rational_kernel(rows);
        if (kernel.empty()) return;
        if (seen.insert(kernel).second) faces.push_back({kernel});
        if (chosen.size() + 1 >= r) return;
        for (std::size_t k = start; k < normals.size(); ++k) {
            chosen.push_back(normals[k]);
            if (rank(IntMatrix::from_rows(chosen, r)) == chosen.size()) self(self, k + 1);
            chosen.pop_back();
        }
    };
    visit(visit, 0);
    return faces;
}

RatVector times(const IntMatrix& m, const RatVector& v) {
    RatVector out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += Rational(m(i, j)) * v[j];
    return out;
}

// Q-orthogonal projection of Q^{-1} chi onto span(basis): B (B^T Q B)^{-1} B^T chi.
RatVector project(const std::vector<IntVector>& basis, const IntMatrix& q, const Character& chi) {
    const std::size_t r = q.rows();
    IntMatrix b = IntMatrix::from_columns(basis, r);
    IntMatrix gram = b.transpose() * q * b;
    IntVector rhs = b.transpose() * chi.entries;
    auto y = solve_square(RatMatrix(gram), to_rational(rhs));
    if (!y) throw InternalError("singular Gram matrix on a face");
    return times(b, *y);
}

bool in_cone(const std::vector<IntVector>& normals, const RatVector& x) {
    for (const auto& n : normals)
        if (dot(to_rational(n), x) < 0) return false;
    return true;
}

std::vector<IntVector> distinct_normals(const TorusAction& a, Support s) {
    std::vector<IntVector> out;
    for (auto j : supports::indices(s)) {
        IntVector n = primitive(a.weights().column(j));
        if (is_zero(n)) continue;
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
    }
    return out;
}

}  // namespace

std::optional<HmMinimum> normalized_hm_min(const TorusAction& a, const Character& chi, Support s) {
    a.check_invariant_character(chi);
    RationalCone cone = limit_cone(a, s);
    ConeQuery nonzero;
    nonzero.exclude_zero = true;
    if (!find_cone_point(cone, nonzero)) return std::nullopt;

    const std::size_t r = a.rank();
    const IntMatrix& q = a.norm_form();
    auto normals = distinct_normals(a, s);

    if (!is_semistable(a, chi, s)) {
        // Maximizer of <lam,chi>/|lam| is the projection onto some face span.
        std::optional<Rational> best;
        IntVector arg;
        for (const auto& face : enumerate_face_spans(normals, r)) {
            RatVector p = project(face.kernel, q, chi);
            if (is_zero(p) || !in_cone(normals, p)) continue;
            Rational val = dot(to_rational(chi.entries), p);
            if (val > 0 && (!best || val > *best)) {
                best = val;
                arg = primitive(p);
            }
        }
        if (!best) throw InternalError("no destabilizing face found for an unstable support");
        return HmMinimum{SignedSquare::from(-1, *best), Cocharacter(arg)};
    }

    if (!is_stable(a, chi, s)) {
        ConeQuery q0;
        q0.zero.push_back(chi.entries);
        q0.exclude_zero = true;
        auto w = find_cone_point(cone, q0);
        if (!w) throw InternalError("semistable non-stable support without a zero-pairing cocharacter");
        return HmMinimum{SignedSquare{}, Cocharacter(*w)};
    }

    // Stable: the cone is pointed and the optimum sits on an extreme ray.
    std::optional<SignedSquare> best;
    IntVector arg;
    for (const auto& face : enumerate_face_spans(normals, r)) {
        if (face.kernel.size() != 1) continue;
        const IntVector& b = face.kernel.front();
        Integer norm_sq = dot(b, q * b);
        for (int orient : {1, -1}) {
            IntVector ray = b;
            if (orient < 0)
                for (auto& x : ray) x = -x;
            if (!cone.contains(ray)) continue;
            Integer pc = dot(ray, chi.entries);
            // value of mu / |lam| is -pc / |ray|
            SignedSquare v = SignedSquare::from(-sgn(pc), Rational(pc * pc, norm_sq));
            if (!best || v < *best) {
                best = v;
                arg = ray;
            }
        }
    }
    if (!best) throw InternalError("stable support with nontrivial cone has no extreme ray");
    return HmMinimum{*best, Cocharacter(arg)};
}

std::set<SignedSquare> minimal_hm_values(const TorusAction& a, const Character& chi, const ScanOptions& opts) {
    a.check_invariant_character(chi);
    auto values = map_supports<std::optional<SignedSquare>>(
        a.dim(),
        [&](Support s) -> std::optional<SignedSquare> {
            if (!orbit_degenerates(a, s)) return std::nullopt;
            auto m = normalized_hm_min(a, chi, s);
            if (!m) throw InternalError("support in X^c with trivial limit cone");
            return m->value;
        },
        opts);
    std::set<SignedSquare> out;
    for (const auto& v : values)
        if (v) out.insert(*v);
    return out;
}

CombinedLinearization combine_linearizations(const TorusAction& a, const Character& chi_L, const Character& chi_M,
                                             const ScanOptions& opts) {
    a.check_invariant_character(chi_L);
    a.check_invariant_character(chi_M);
    const Character neg_m = -chi_M;
    using Pair = std::optional<std::pair<SignedSquare, SignedSquare>>;
    auto per_support = map_supports<Pair>(
        a.dim(),
        [&](Support s) -> Pair {
            if (is_semistable(a, chi_L, s)) return std::nullopt;
            auto d = normalized_hm_min(a, chi_L, s);
            auto e = normalized_hm_min(a, neg_m, s);
            if (!d || !e) throw InternalError("unstable support with trivial limit cone");
            if (d->value.sign >= 0)
                throw InternalError("non-negative normalized minimum on unstable support " + supports::to_string(s));
            return std::make_pair(d->value, -e->value);
        },
        opts);

    CombinedLinearization out;
    for (const auto& p : per_support) {
        if (!p) continue;
        if (!out.d || p->first > *out.d) out.d = p->first;
        if (!out.e || p->second > *out.e) out.e = p->second;
    }
    if (!out.d || out.e->sign <= 0) {
        out.m0 = 1;
    } else {
        out.m0 = floor_sqrt(out.e->square / out.d->square) + 1;
    }
    out.combined = out.m0 * chi_L + chi_M;
    return out;
}

bool in_two_step_locus(const TorusAction& a, const Character& chi_L, const Character& chi_M, Support s) {
    if (!is_semistable(a, chi_L, s)) return false;
    a.check_invariant_character(chi_M);
    ConeQuery q;
    q.zero.push_back(chi_L.entries);
    q.positive.push_back(chi_M.entries);
    return !find_cone_point(limit_cone(a, s), q).has_value();
}

std::vector<Support> semistable_supports(const TorusAction& a, const Character& chi, const ScanOptions& opts) {
    a.check_invariant_character(chi);
    return filter_supports(a.dim(), [&](Support s) { return is_semistable(a, chi, s); }, opts);
}

std::vector<Support> stable_supports(const TorusAction& a, const Character& chi, const ScanOptions& opts) {
    a.check_invariant_character(chi);
    return filter_supports(a.dim(), [&](Support s) { return is_stable(a, chi, s); }, opts);
}

}  // namespace torgit
