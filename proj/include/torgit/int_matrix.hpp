#pragma once

#include "torgit/arith.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace torgit {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;
    IntMatrix select_columns(const std::vector<std::size_t>& cols) const;
    IntMatrix transpose() const;

    IntVector operator*(const IntVector& v) const;
    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[target] += factor * row[source]
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void negate_row(std::size_t i);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Dense row-major rational matrix, used for exact elimination.
struct RatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> data;

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    explicit RatMatrix(const IntMatrix& m);

    Rational& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

Integer determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Basis (as columns) of the rational kernel {x : m x = 0}, each column a
/// primitive integer vector. Not necessarily a lattice basis.
std::vector<IntVector> rational_kernel(const IntMatrix& m);

/// Unique solution of the square system a x = b, or nullopt if singular.
std::optional<RatVector> solve_square(RatMatrix a, RatVector b);

bool is_unimodular(const IntMatrix& m);

/// Symmetric with all leading principal minors positive.
bool is_positive_definite(const IntMatrix& m);

}  // namespace torgit
