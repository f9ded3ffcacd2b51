#pragma once

#include "richlines/line.hpp"
#include "richlines/point_set.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace richlines {

/// Integer grid {1..h}^d in lexicographic order.
PointSet grid(std::size_t d, std::size_t h, std::size_t cap = size_cap());

/*
 * `copies` planar-style grids {1..h}^l pasted into d-space on parallel l-flats.
 *
 * Copy c (1-based) sits on the flat x_{l+1} = ... = x_d = c and is shifted by
 * h*(c-1)^2 along x_1. Three points taken from three distinct copies a<b<c are
 * then never collinear: collinearity would force h*(c-a) to equal a difference
 * of two in-grid slopes, which is at most 2(h-1) in absolute value. So every
 * line with 3 or more points lies inside a single copy.
 */
PointSet pasted_grids(std::size_t d, std::size_t l, std::size_t copies, std::size_t h,
                      std::size_t cap = size_cap());

/// l-fold Cartesian product V^l in C^{dl}, lexicographic in factor indices.
PointSet power(const PointSet& V, std::size_t l, std::size_t cap = size_cap());

struct SumProductConfig {
    PointSet points;           // union over t in Q of {t} x (A + tA)^{d-1}
    std::vector<Line> lines;   // through a in V_0 with direction (1, b_2..b_d), b_i in A
    std::vector<std::size_t> v0;  // indices of V_0 = {0} x A^{d-1}
};

/// Requires 0 in Q and d >= 2. Duplicate entries of A or Q are rejected.
SumProductConfig sumproduct_config(const Vec& A, const Vec& Q, std::size_t d, std::size_t cap = size_cap());

/// Sum set of A and the dilate tA, i.e. {a + t*b : a, b in A}, sorted and deduplicated.
Vec sum_dilate(const Vec& A, const Scalar& t);

/// A declarative description of one of the generators above.
struct GeneratorSpec {
    std::string kind;  // grid | pasted | power | sumproduct | random
    std::size_t d = 2;
    std::size_t h = 3;
    std::size_t l = 2;          // flat dimension (pasted) or exponent (power)
    std::size_t copies = 1;
    Vec A;
    Vec Q;
    std::size_t n = 0;          // random: point count
    std::int64_t coord_range = 5;  // random: coordinates drawn from [-range, range]
    std::uint64_t seed = 0;
    std::string base_kind = "grid";  // power: factor generator (grid with base_d/h)
    std::size_t base_d = 1;
};

PointSet generate(const GeneratorSpec& spec, std::size_t cap = size_cap());

/// n distinct integer points with coordinates uniform in [-range, range], seeded.
PointSet random_points(std::size_t d, std::size_t n, std::int64_t range, std::uint64_t seed);

}  // namespace richlines
