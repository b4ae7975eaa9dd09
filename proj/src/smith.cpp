#include "torgit/smith.hpp"

#include "torgit/errors.hpp"

#include <algorithm>

namespace torgit {

namespace {

struct Work {
    IntMatrix a;
    IntMatrix u;
    IntMatrix v;

    void swap_rows(std::size_t i, std::size_t j) { a.swap_rows(i, j); u.swap_rows(i, j); }
    void swap_cols(std::size_t i, std::size_t j) { a.swap_cols(i, j); v.swap_cols(i, j); }
    void add_row(std::size_t t, std::size_t s, const Integer& f) { a.add_row_multiple(t, s, f); u.add_row_multiple(t, s, f); }
    void add_col(std::size_t t, std::size_t s, const Integer& f) { a.add_col_multiple(t, s, f); v.add_col_multiple(t, s, f); }
    void negate_row(std::size_t i) { a.negate_row(i); u.negate_row(i); }
};

// Moves the smallest nonzero |entry| of the trailing block to (k,k).
bool bring_min_pivot(Work& w, std::size_t k) {
    const auto& a = w.a;
    bool found = false;
    std::size_t bi = 0, bj = 0;
    Integer best;
    for (std::size_t i = k; i < a.rows(); ++i)
        for (std::size_t j = k; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Integer m = abs(a(i, j));
            if (!found || m < best) {
                best = m;
                bi = i;
                bj = j;
                found = true;
            }
        }
    if (!found) return false;
    w.swap_rows(k, bi);
    w.swap_cols(k, bj);
    return true;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Work w{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    const std::size_t n = std::min(rows, cols);

    for (std::size_t k = 0; k < n; ++k) {
        if (!bring_min_pivot(w, k)) break;
        for (;;) {
            bool dirty = false;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (w.a(i, k) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), w.a(i, k).get_mpz_t(), w.a(k, k).get_mpz_t());
                w.add_row(i, k, -q);
                if (w.a(i, k) != 0) dirty = true;
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (w.a(k, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), w.a(k, j).get_mpz_t(), w.a(k, k).get_mpz_t());
                w.add_col(j, k, -q);
                if (w.a(k, j) != 0) dirty = true;
            }
            if (dirty) {
                bring_min_pivot(w, k);
                continue;
            }
            // Row and column k are clear; enforce divisibility on the rest.
            std::size_t bad_i = rows;
            for (std::size_t i = k + 1; i < rows && bad_i == rows; ++i)
                for (std::size_t j = k + 1; j < cols; ++j)
                    if (w.a(i, j) % w.a(k, k) != 0) {
                        bad_i = i;
                        break;
                    }
            if (bad_i == rows) break;
            w.add_row(k, bad_i, 1);
        }
        if (w.a(k, k) < 0) w.negate_row(k);
    }

    SmithDecomposition out;
    out.diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.diag[i] = w.a(i, i);
    out.left = std::move(w.u);
    out.right = std::move(w.v);
    return out;
}

IntMatrix diagonal_matrix(const IntVector& diag, std::size_t rows, std::size_t cols) {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < diag.size() && i < rows && i < cols; ++i) d(i, i) = diag[i];
    return d;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (!is_unimodular(m)) throw InternalError("inverse requested for a non-unimodular matrix");
    const std::size_t n = m.rows();
    IntMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        RatVector e(n, Rational(0));
        e[j] = 1;
        auto col = solve_square(RatMatrix(m), e);
        if (!col) throw InternalError("singular unimodular matrix");
        for (std::size_t i = 0; i < n; ++i) {
            if ((*col)[i].get_den() != 1) throw InternalError("non-integral unimodular inverse");
            inv(i, j) = (*col)[i].get_num();
        }
    }
    return inv;
}

}  // namespace torgit
