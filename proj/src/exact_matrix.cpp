#include "richlines/exact_matrix.hpp"

#include <stdexcept>

namespace richlines {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    ExactMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

ExactMatrix ExactMatrix::from_sparse(const std::vector<SparseRow>& rows, std::size_t cols) {
    ExactMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, v] : rows[i]) {
            if (j >= cols) throw std::out_of_range("sparse column index out of range");
            m(i, j) = v;
        }
    return m;
}

Vec ExactMatrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec ExactMatrix::col(std::size_t j) const {
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ExactMatrix ExactMatrix::select_rows(const std::vector<std::size_t>& which) const {
    ExactMatrix out(which.size(), cols_);
    for (std::size_t i = 0; i < which.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(which[i], j);
    return out;
}

bool ExactMatrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    ExactMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
        }
    return c;
}

Vec operator*(const ExactMatrix& a, const Vec& x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vec y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            if (!a(i, j).is_zero() && !x[j].is_zero()) y[i] += a(i, j) * x[j];
    return y;
}

std::size_t rank(const ExactMatrix& input) {
    if (input.empty()) return 0;
    ExactMatrix m = input;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    // Clear denominators row by row so elimination runs over Z[i].
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j)
            if (!m(i, j).is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).denominator_lcm().get_mpz_t());
        if (l != 1) {
            Scalar factor{mpq_class(l)};
            for (std::size_t j = 0; j < cols; ++j)
                if (!m(i, j).is_zero()) m(i, j) *= factor;
        }
    }

    Scalar previous = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));

        const Scalar pivot = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Scalar lead = m(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                Scalar v = pivot * m(i, j);
                if (!lead.is_zero() && !m(r, j).is_zero()) v -= lead * m(r, j);
                if (!v.is_zero() && !previous.is_one()) v /= previous;
                m(i, j) = std::move(v);
            }
            m(i, c) = 0;
        }
        previous = pivot;
        ++r;
    }
    return r;
}

std::pair<ExactMatrix, std::vector<std::size_t>> rref(const ExactMatrix& input) {
    ExactMatrix m = input;
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
        const Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Scalar f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::vector<Vec> nullspace(const ExactMatrix& m) {
    const std::size_t cols = m.cols();
    auto [reduced, pivots] = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            if (!reduced(k, free).is_zero()) v[pivots[k]] = -reduced(k, free);
        basis.push_back(pivot_normalized(v));
    }
    return basis;
}

}  // namespace richlines
