#include "richlines/point_set.hpp"

#include <cstdlib>

namespace richlines {

std::size_t size_cap() {
    if (const char* env = std::getenv("RICHLINES_SIZE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultSizeCap;
}

void check_size_cap(std::size_t count, std::size_t cap, const std::string& what) {
    if (count > cap)
        throw SizeCapExceeded(what + " would produce " + std::to_string(count) +
                              " points, above the cap of " + std::to_string(cap));
}

PointSet::PointSet(std::size_t dim, std::vector<Point> points, std::vector<std::string> labels)
    : dim_(dim) {
    if (!labels.empty() && labels.size() != points.size())
        throw std::invalid_argument("label count does not match point count");
    points_.reserve(points.size());
    for (std::size_t k = 0; k < points.size(); ++k)
        add(std::move(points[k]), labels.empty() ? std::string() : std::move(labels[k]));
}

Field PointSet::field() const {
    for (const auto& p : points_)
        if (field_of(p) == Field::gaussian) return Field::gaussian;
    return Field::rational;
}

std::size_t PointSet::add(Point p, std::string label) {
    if (p.size() != dim_)
        throw std::invalid_argument("point has " + std::to_string(p.size()) + " coordinates, expected " +
                                    std::to_string(dim_));
    auto [it, inserted] = index_.emplace(p, points_.size());
    if (!inserted) throw std::invalid_argument("duplicate point at index " + std::to_string(it->second));
    points_.push_back(std::move(p));
    if (!label.empty() || !labels_.empty()) {
        labels_.resize(points_.size() - 1);
        labels_.push_back(std::move(label));
    }
    return points_.size() - 1;
}

std::optional<std::size_t> PointSet::index_of(const Point& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

PointSet PointSet::subset(const std::vector<std::size_t>& indices) const {
    PointSet out(dim_);
    for (auto i : indices) out.add(points_.at(i), labels_.empty() ? std::string() : labels_[i]);
    return out;
}

bool operator==(const PointSet& a, const PointSet& b) { return a.dim() == b.dim() && a.points() == b.points(); }

}  // namespace richlines
