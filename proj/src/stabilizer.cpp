#include "torgit/stabilizer.hpp"

#include "torgit/errors.hpp"
#include "torgit/smith.hpp"

namespace torgit {

Integer DiagonalizableGroup::torus_part_order() const {
    Integer p = 1;
    for (const auto& d : invariant_factors) p *= d;
    return p;
}

DiagonalizableGroup stabilizer(const TorusAction& a, Support s) {
    IntMatrix ws = a.restricted_weights(s);
    DiagonalizableGroup g;
    g.dimension = a.rank() - rank(ws);
    if (ws.rows() > 0 && ws.cols() > 0) {
        for (const auto& d : smith_normal_form(ws).diag)
            if (d > 1) g.invariant_factors.push_back(d);
    }
    std::size_t order = 0;
    for (const auto& h : finite_group_closure(a))
        if (apply(h, s) == s) ++order;
    g.finite_part_order = order;
    return g;
}

namespace {

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    const std::size_t n = m.rows;
    RatMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        RatVector e(n, Rational(0));
        e[j] = 1;
        auto col = solve_square(m, e);
        if (!col) return std::nullopt;
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*col)[i];
    }
    return inv;
}

RatMatrix product(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k)
            for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
    return c;
}

RatMatrix transpose(const RatMatrix& a) {
    RatMatrix t(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
    return t;
}

// Smallest positive integer multiple with coprime entries.
IntMatrix primitive_integer_multiple(const RatMatrix& m) {
    IntVector flat = primitive(m.data);
    IntMatrix out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out(i, j) = flat[i * m.cols + j];
    return out;
}

IntMatrix top_rows(const IntMatrix& m, std::size_t k) {
    IntMatrix out(k, m.cols());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

IntMatrix left_columns(const IntMatrix& m, std::size_t k) {
    IntMatrix out(m.rows(), k);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < k; ++j) out(i, j) = m(i, j);
    return out;
}

}  // namespace

std::optional<Character> EffectiveAction::transport(const Character& chi) const {
    if (chi.size() != character_basis.rows()) throw InputError("character length differs from torus rank");
    for (const auto& lam : kernel_cocharacters)
        if (dot(lam, chi.entries) != 0) return std::nullopt;
    Character out(to_effective * chi.entries);
    if (character_basis * out.entries != chi.entries) return std::nullopt;
    return out;
}

EffectiveAction effectivize(const TorusAction& a) {
    const std::size_t r = a.rank();
    const IntMatrix& w = a.weights();
    EffectiveAction out;
    out.kernel_cocharacters = rational_kernel(w.transpose());
    const std::size_t k = r - out.kernel_cocharacters.size();

    IntMatrix u = IntMatrix::identity(r);
    if (r > 0 && w.cols() > 0) u = smith_normal_form(w).left;
    IntMatrix u_inv = unimodular_inverse(u);

    IntMatrix new_weights = top_rows(u * w, k);
    out.character_basis = left_columns(u_inv, k);
    out.to_effective = top_rows(u, k);

    IntMatrix new_norm = IntMatrix::identity(k);
    if (k > 0) {
        auto q_inv = inverse(RatMatrix(a.norm_form()));
        if (!q_inv) throw InternalError("singular norm form");
        RatMatrix b(out.character_basis);
        auto induced = inverse(product(product(transpose(b), *q_inv), b));
        if (!induced) throw InternalError("degenerate induced norm form");
        new_norm = primitive_integer_multiple(*induced);
    }

    std::vector<FinitePartElement> finite;
    for (const auto& g : a.finite_part()) {
        IntMatrix conj = u * g.aut * u_inv;
        for (std::size_t i = k; i < r; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (conj(i, j) != 0) throw InternalError("torus automorphism does not preserve the weight span");
        IntMatrix block(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) block(i, j) = conj(i, j);
        finite.push_back({g.perm, block});
    }
    try {
        out.action = TorusAction(std::move(new_weights), std::move(new_norm), std::move(finite));
    } catch (const InputError& e) {
        throw InternalError(std::string("effectivized action is invalid: ") + e.what());
    }
    return out;
}

ConeAction cone_over_projective(const TorusAction& a, const Character& linearization_twist, const Integer& d) {
    if (d <= 0) throw InputError("the degree d must be positive");
    a.check_invariant_character(linearization_twist);
    const std::size_t r = a.rank(), n = a.dim();
    IntMatrix w(r + 1, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < r; ++i) w(i, j) = a.weights()(i, j);
        w(r, j) = 1;
    }
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
        finite.push_back({g.perm, aut});
    }
    IntVector chi = linearization_twist.entries;
    chi.push_back(-d);
    return {TorusAction(std::move(w), std::move(q), std::move(finite)), Character(std::move(chi))};
}

}  // namespace torgit
