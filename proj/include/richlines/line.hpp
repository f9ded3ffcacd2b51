#pragma once

#include "richlines/point_set.hpp"

#include <cstddef>
#include <vector>

namespace richlines {

/*
 * Canonical affine line {base + t*dir}.
 *
 *   dir  : first nonzero coordinate (the pivot) equals 1
 *   base : the unique point of the line whose pivot coordinate is 0
 *
 * The pair (dir, base) is unique per affine line, so equality and hashing
 * ignore the incidence list. The parameter of a point p on the line is its
 * pivot coordinate p[pivot].
 */
struct Line {
    Vec dir;
    Vec base;
    std::vector<std::size_t> incident;  // sorted point indices

    std::size_t pivot() const { return pivot_index(dir); }
    std::size_t dim() const { return dir.size(); }

    bool contains(const Point& p) const;
    Scalar parameter(const Point& p) const { return p[pivot()]; }
    Point at(const Scalar& t) const;

    friend bool operator==(const Line& a, const Line& b) { return a.dir == b.dir && a.base == b.base; }
};

struct LineKeyHash {
    std::size_t operator()(const Line& l) const;
};

/// Lexicographic order on (dir, base); a total order on canonical lines.
bool line_key_less(const Line& a, const Line& b);

/// Canonical line through two distinct points (no incidence list).
/// Throws std::invalid_argument when p == q.
Line canonical_line(const Point& p, const Point& q);

/// Canonical line through `base_point` with direction `direction` (need not be normalized).
Line line_through(const Point& base_point, const Vec& direction);

/// Fills `line.incident` with the sorted indices of the points of V on the line.
void attach_incidences(Line& line, const PointSet& V);

/// Indices on the line ordered by parameter (real part, then imaginary part).
std::vector<std::size_t> order_along_line(const Line& line, const PointSet& V);

}  // namespace richlines
