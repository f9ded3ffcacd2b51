#pragma once

#include "richlines/point_set.hpp"

#include <cstddef>
#include <vector>

namespace richlines {

/// Affine hyperplane {x : <x, normal> = offset}, normal pivot-normalized.
struct Hyperplane {
    Vec normal;
    Scalar offset;

    /// Normalizes (normal, offset) jointly; throws std::invalid_argument for a zero normal.
    static Hyperplane make(const Vec& normal, const Scalar& offset);

    bool contains(const Point& x) const { return dot(x, normal) == offset; }
    std::size_t dim() const { return normal.size(); }
    std::vector<std::size_t> members(const PointSet& V) const;

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Dimension of the affine hull of V (-1 for the empty set).
long affine_dimension(const PointSet& V);

/// Hyperplane through the given points if they span one (affinely independent
/// d points, or any set with a (d-1)-dimensional hull); empty otherwise.
std::vector<Hyperplane> hyperplanes_through(const std::vector<Point>& pts, std::size_t dim);

struct FlatSubset {
    std::size_t count = 0;
    std::vector<std::size_t> members;
    Hyperplane hyperplane;  // witness; only meaningful for hyperplane searches
};

/// s_{d-1}: the maximum number of points of V on one hyperplane, with a witness.
/// Exhaustive over affinely independent d-subsets. If V itself lies in a
/// hyperplane, returns |V| and the first kernel hyperplane.
FlatSubset max_hyperplane_subset(const PointSet& V);

/// s_l: the maximum number of points of V in one l-flat (exhaustive over (l+1)-subsets).
FlatSubset max_flat_subset(const PointSet& V, std::size_t l);

}  // namespace richlines
