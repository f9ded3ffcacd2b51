#pragma once

#include "richlines/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace richlines {

/// A sparse row: (column, value) pairs with strictly increasing columns.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Dense row-major matrix over Q(i).
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
    static ExactMatrix from_sparse(const std::vector<SparseRow>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    ExactMatrix transpose() const;
    ExactMatrix select_rows(const std::vector<std::size_t>& which) const;
    bool is_zero() const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend Vec operator*(const ExactMatrix& a, const Vec& x);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination. Rows are first scaled to
/// Gaussian-integer entries; every intermediate value is then a minor of that
/// integral matrix. Pivot = first nonzero entry in the column, rows scanned top-down.
std::size_t rank(const ExactMatrix& m);

/// Basis of the right kernel {x : m x = 0}, one vector per free column of the
/// reduced row echelon form, each scaled so its first nonzero entry is 1.
std::vector<Vec> nullspace(const ExactMatrix& m);

/// Reduced row echelon form and its pivot columns (Gauss-Jordan over the field).
std::pair<ExactMatrix, std::vector<std::size_t>> rref(const ExactMatrix& m);

}  // namespace richlines
