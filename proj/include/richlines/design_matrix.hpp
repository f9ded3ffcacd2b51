#pragma once

#include "richlines/exact_matrix.hpp"
#include "richlines/line.hpp"
#include "richlines/point_set.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace richlines {

using Tuple = std::vector<std::size_t>;

/// Covers the points of one line (given in line order) by r-tuples: consecutive
/// disjoint blocks, plus the last r points when r does not divide the count.
/// Throws std::invalid_argument when fewer than r points are given.
std::vector<Tuple> tuple_cover(const std::vector<std::size_t>& line_points, std::size_t r);

struct TupleCover {
    std::vector<std::vector<Tuple>> per_line;  // R_L, in input line order
    std::vector<Tuple> tuples;                 // R, concatenation of the R_L
    std::vector<std::size_t> line_of;          // line index of each tuple in R
};

TupleCover cover_lines(const PointSet& V, const std::vector<Line>& lines, std::size_t r);

/// Coefficients a (first entry 1, all nonzero) with sum_j a_j phi(V[tuple[j]]) = 0
/// in degree `deg`. Throws std::invalid_argument if the points are not distinct and
/// collinear, std::logic_error if the dependency is not unique or has a zero entry.
Vec dependency_coeffs(const PointSet& V, const Tuple& tuple, std::size_t deg);

struct DesignParameters {
    std::size_t q = 0;  // max row support
    std::size_t k = 0;  // min column support
    std::size_t t = 0;  // max pairwise column-support intersection

    friend bool operator==(const DesignParameters&, const DesignParameters&) = default;
};

struct DesignMatrix {
    std::size_t cols = 0;
    std::vector<SparseRow> rows;
    DesignParameters params;  // measured
    TupleCover cover;         // empty for matrices not built from lines

    std::size_t row_count() const { return rows.size(); }
    ExactMatrix dense() const { return ExactMatrix::from_sparse(rows, cols); }
};

DesignParameters measure_design(const std::vector<SparseRow>& rows, std::size_t cols);

struct DesignCheck {
    DesignParameters measured;
    bool ok = true;  // q <= declared.q, k >= declared.k, t <= declared.t
};

DesignCheck verify_design(const DesignMatrix& A, std::optional<DesignParameters> declared = std::nullopt);

struct Assembly {
    DesignMatrix A;
    ExactMatrix M;              // embed(V, r - 2)
    bool product_is_zero = false;
    std::size_t max_pair_multiplicity = 0;
    bool every_point_covered = true;  // each point in >= (its line count) tuples
};

/// Design matrix of the r-tuple covers of `lines` (all r-rich) against V, with
/// M = embed(V, r-2). A*M = 0 is checked exactly and recorded.
Assembly assemble(const PointSet& V, const std::vector<Line>& lines, std::size_t r);

/// Largest number of tuples sharing a pair of points.
std::size_t max_pair_multiplicity(const std::vector<Tuple>& tuples);

struct RankBoundReport {
    std::size_t n = 0;
    std::size_t m = 0;
    DesignParameters params;
    std::size_t rank_a = 0;
    mpq_class column_bound;  // n - n t q^2 / k
    mpq_class row_bound;     // n - m t q^2 / k^2
    bool vacuous = false;    // k = 0
    bool column_bound_holds = true;
    bool row_bound_holds = true;
    std::optional<std::size_t> rank_m;
    bool rank_sum_ok = true;  // rank(A) + rank(M) <= n, when rank_m is given

    bool ok() const { return column_bound_holds && row_bound_holds && rank_sum_ok; }
};

RankBoundReport rank_bound_check(const DesignMatrix& A, std::optional<std::size_t> rank_m = std::nullopt);

/// Random design matrix for stress tests: rows are random q-subsets of the n
/// columns with nonzero entries in [-3, 3]. A candidate row is rejected if it
/// would push some pairwise column intersection above 2. Rows are added until
/// every column has support >= min_support or the attempt budget runs out.
DesignMatrix structured_random_design(std::size_t n, std::size_t q, std::size_t min_support, std::uint64_t seed);

}  // namespace richlines
