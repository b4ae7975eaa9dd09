#include "torgit/luna.hpp"

#include "torgit/errors.hpp"
#include "torgit/hilbert.hpp"
#include "torgit/smith.hpp"

#include <algorithm>

namespace torgit {

LunaSlice slice_at_fixed_point(const TorusAction& a, Support s, const std::vector<Character>& extra_orbit_weights) {
    a.check_support(s);
    const std::size_t r = a.rank(), n = a.dim();
    IntMatrix ws_t = a.restricted_weights(s).transpose();
    const std::size_t rk = rank(ws_t);

    IntMatrix basis = IntMatrix::identity(r);
    if (ws_t.rows() > 0 && r > 0) {
        IntMatrix right = smith_normal_form(ws_t).right;
        basis = IntMatrix(r, r - rk);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = rk; j < r; ++j) basis(i, j - rk) = right(i, j);
    }
    IntMatrix basis_t = basis.transpose();

    LunaSlice out;
    out.stabilizer_cocharacters = basis;
    std::vector<bool> moved(n, false);
    std::vector<IntVector> chosen;
    for (auto j : supports::indices(s)) {
        chosen.push_back(a.weights().column(j));
        if (rank(IntMatrix::from_rows(chosen, r)) == chosen.size()) {
            moved[j] = true;
        } else {
            chosen.pop_back();
        }
    }
    for (const auto& w : extra_orbit_weights) {
        if (w.size() != r) throw InputError("orbit weight length differs from torus rank");
        IntVector target = basis_t * w.entries;
        bool found = false;
        for (std::size_t j = 0; j < n && !found; ++j)
            if (!moved[j] && basis_t * a.weights().column(j) == target) moved[j] = found = true;
        if (!found) throw InternalError("orbit weight " + to_string(w.entries) + " is not an available tangent weight");
    }

    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < n; ++j) {
        if (moved[j]) {
            out.orbit_coordinates.push_back(j);
        } else {
            out.kept_coordinates.push_back(j);
            cols.push_back(basis_t * a.weights().column(j));
        }
    }
    IntMatrix norm = basis_t * a.norm_form() * basis;
    out.action = TorusAction(IntMatrix::from_columns(cols, r - rk), std::move(norm));
    return out;
}

std::vector<IntVector> cubic_forms_chart_exponents() {
    std::vector<IntVector> out;
    for (long a = 3; a >= 0; --a)
        for (long b = 3 - a; b >= 0; --b) {
            long c = 3 - a - b;
            if (a == 1 && b == 1 && c == 1) continue;
            out.push_back({a, b, c});
        }
    return out;
}

TorusAction cubic_forms_chart() {
    std::vector<IntVector> cols;
    for (auto e : cubic_forms_chart_exponents()) {
        for (auto& x : e) x -= 1;
        cols.push_back(e);
    }
    return TorusAction(IntMatrix::from_columns(cols, 3));
}

std::vector<Character> cubic_forms_orbit_weights() {
    std::vector<Character> out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            IntVector w(3, Integer(-1));
            w[i] += 2;
            w[j] += 1;
            out.push_back(Character(w));
        }
    return out;
}

namespace {

IntMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
    IntMatrix p(perm.size(), perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) p(perm[j], j) = 1;
    return p;
}

}  // namespace

CubicsCertificate cubics_example() {
    CubicsCertificate out;
    out.slice = slice_at_fixed_point(cubic_forms_chart(), 0, cubic_forms_orbit_weights());
    const TorusAction& bare = out.slice.action;
    std::vector<FinitePartElement> s3;
    for (std::vector<std::size_t> perm : {std::vector<std::size_t>{1, 0, 2}, std::vector<std::size_t>{1, 2, 0}})
        s3.push_back({perm, permutation_matrix(perm)});
    out.slice.action = TorusAction(bare.weights(), bare.norm_form(), std::move(s3));

    out.effective = effectivize(out.slice.action);
    out.eb = extended_weighted_blowup(out.effective.action, reduced_center(supports::full(3)));
    out.dm_support = supports::full(3);
    out.stabilizer = stabilizer(out.eb.ambient, out.dm_support);
    out.invariants = hilbert_basis_bounded(out.slice.action.weights(), 6);
    out.tower = desingularize(out.effective.action, Character(IntVector(out.effective.action.rank(), Integer(0))));
    auto sat = saturated_locus(out.eb);
    out.dm_support_saturated = std::find(sat.begin(), sat.end(), out.dm_support) != sat.end();
    return out;
}

}  // namespace torgit
