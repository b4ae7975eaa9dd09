#pragma once

#include "torgit/int_matrix.hpp"

namespace torgit {

/// left * m * right == diagonal(diag), diag[i] | diag[i+1], all diag >= 0.
/// diag has min(rows, cols) entries, trailing zeros included.
struct SmithDecomposition {
    IntVector diag;
    IntMatrix left;
    IntMatrix right;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// The m.rows() x m.cols() matrix with diag on the main diagonal.
IntMatrix diagonal_matrix(const IntVector& diag, std::size_t rows, std::size_t cols);

/// Inverse of a unimodular matrix (throws InternalError otherwise).
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace torgit
