#pragma once

#include "richlines/line.hpp"
#include "richlines/point_set.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace richlines {

/// Bipartite point/line incidence graph. Left vertices are point indices,
/// right vertices are line indices; edges are sorted (point, line) pairs.
struct IncidenceGraph {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t size() const { return edges.size(); }
};

/// An r-term progression {start + j*diff : 0 <= j < r}; diff is sign-canonical.
struct APRecord {
    Point start;
    Vec diff;
    std::size_t length = 0;
    std::vector<std::size_t> members;  // point indices, in progression order

    Point term(std::size_t j) const;
};

struct APCount {
    std::size_t count = 0;
    std::vector<APRecord> progressions;  // sorted by member indices
};

/// Lines with at least r points of V, each with its full incidence list,
/// sorted by incidence list. OpenMP kernel: every point anchors the lines on
/// which it is the lowest-indexed member, found by grouping the directions to
/// higher-indexed points.
std::vector<Line> rich_lines(const PointSet& V, std::size_t r);

/// Incidence graph of V against `lines`; every edge is checked exactly.
/// Throws std::invalid_argument if a line lists a point it does not contain.
IncidenceGraph incidences(const PointSet& V, const std::vector<Line>& lines);

/// Number of unordered r-term progressions contained in V (each set counted
/// once, its difference taken sign-canonical). OpenMP over the start point.
APCount count_aps(const PointSet& V, std::size_t r, bool keep_records = true);

/// Per-point count of incident lines.
std::vector<std::size_t> line_degrees(std::size_t n, const std::vector<Line>& lines);

/// {0..r-1} x V in C^{1+d}; index of (i, V[k]) is i*|V| + k.
PointSet progression_lift(const PointSet& V, std::size_t r);

/// The line {(0,u) + z(1,w)} carrying the progression in progression_lift(V, r).
Line lift_progression(const APRecord& ap, const PointSet& lifted, std::size_t base_count);

namespace reference {

/// Serial reference: one associative map keyed by canonical line over all point pairs.
std::vector<Line> rich_lines(const PointSet& V, std::size_t r);

/// Serial reference for count_aps.
APCount count_aps(const PointSet& V, std::size_t r, bool keep_records = true);

}  // namespace reference

}  // namespace richlines
