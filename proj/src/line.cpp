#include "richlines/line.hpp"

#include <algorithm>
#include <stdexcept>

namespace richlines {

bool Line::contains(const Point& p) const {
    if (p.size() != dir.size()) throw std::invalid_argument("point dimension does not match line");
    const std::size_t k = pivot();
    const Scalar& t = p[k];
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (j == k) continue;
        Scalar expected = base[j];
        if (!dir[j].is_zero() && !t.is_zero()) expected += t * dir[j];
        if (expected != p[j]) return false;
    }
    return true;
}

Point Line::at(const Scalar& t) const {
    Point p(base);
    for (std::size_t j = 0; j < p.size(); ++j)
        if (!dir[j].is_zero()) p[j] += t * dir[j];
    return p;
}

std::size_t LineKeyHash::operator()(const Line& l) const {
    VecHash h;
    return h(l.dir) * 31 + h(l.base);
}

bool line_key_less(const Line& a, const Line& b) {
    if (a.dir != b.dir) return std::lexicographical_compare(a.dir.begin(), a.dir.end(), b.dir.begin(), b.dir.end());
    return std::lexicographical_compare(a.base.begin(), a.base.end(), b.base.begin(), b.base.end());
}

Line line_through(const Point& base_point, const Vec& direction) {
    if (base_point.size() != direction.size()) throw std::invalid_argument("dimension mismatch");
    if (is_zero(direction)) throw std::invalid_argument("zero direction");
    Line line;
    line.dir = pivot_normalized(direction);
    const std::size_t k = line.pivot();
    const Scalar t = base_point[k];
    line.base = base_point;
    if (!t.is_zero())
        for (std::size_t j = 0; j < line.base.size(); ++j)
            if (!line.dir[j].is_zero()) line.base[j] -= t * line.dir[j];
    return line;
}

Line canonical_line(const Point& p, const Point& q) {
    if (p.size() != q.size()) throw std::invalid_argument("dimension mismatch");
    if (p == q) throw std::invalid_argument("canonical_line needs two distinct points");
    return line_through(p, q - p);
}

void attach_incidences(Line& line, const PointSet& V) {
    line.incident.clear();
    for (std::size_t i = 0; i < V.size(); ++i)
        if (line.contains(V[i])) line.incident.push_back(i);
}

std::vector<std::size_t> order_along_line(const Line& line, const PointSet& V) {
    std::vector<std::size_t> order = line.incident;
    const std::size_t k = line.pivot();
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return V[a][k] < V[b][k]; });
    return order;
}

}  // namespace richlines
