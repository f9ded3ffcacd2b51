#pragma once

#include "richlines/scalar.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace richlines {

using Point = Vec;

/// Thrown when a generator or pipeline would exceed the configured point cap.
class SizeCapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr std::size_t kDefaultSizeCap = 20000;

/// Point cap: RICHLINES_SIZE_CAP when set to a positive integer, else 20000.
std::size_t size_cap();

/// Throws SizeCapExceeded when `count` exceeds `cap`. `what` names the request.
void check_size_cap(std::size_t count, std::size_t cap, const std::string& what);

/// A finite list of pairwise-distinct points of a common dimension.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t dim) : dim_(dim) {}
    PointSet(std::size_t dim, std::vector<Point> points, std::vector<std::string> labels = {});

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    Field field() const;

    const Point& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const { return points_; }
    const std::vector<std::string>& labels() const { return labels_; }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    /// Appends p; throws std::invalid_argument on a dimension mismatch or duplicate.
    std::size_t add(Point p, std::string label = {});

    std::optional<std::size_t> index_of(const Point& p) const;
    bool contains(const Point& p) const { return index_.find(p) != index_.end(); }

    PointSet subset(const std::vector<std::size_t>& indices) const;

private:
    std::size_t dim_ = 0;
    std::vector<Point> points_;
    std::vector<std::string> labels_;
    std::unordered_map<Point, std::size_t, VecHash> index_;
};

bool operator==(const PointSet& a, const PointSet& b);

}  // namespace richlines
