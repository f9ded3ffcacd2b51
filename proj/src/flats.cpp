#include "richlines/flats.hpp"

#include "richlines/exact_matrix.hpp"

#include <stdexcept>

namespace richlines {

Hyperplane Hyperplane::make(const Vec& normal, const Scalar& offset) {
    const std::size_t p = pivot_index(normal);
    if (p == normal.size()) throw std::invalid_argument("hyperplane normal must be nonzero");
    const Scalar inv = normal[p].inverse();
    Hyperplane h{inv * normal, offset * inv};
    return h;
}

std::vector<std::size_t> Hyperplane::members(const PointSet& V) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < V.size(); ++i)
        if (contains(V[i])) out.push_back(i);
    return out;
}

namespace {

ExactMatrix augmented(const std::vector<Point>& pts, std::size_t dim) {
    ExactMatrix m(pts.size(), dim + 1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = pts[i][j];
        m(i, dim) = 1;
    }
    return m;
}

// Kernel vector (h, c) of [x | 1] gives the hyperplane <x, h> = -c.
Hyperplane from_kernel(const Vec& w, std::size_t dim) {
    Vec h(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(dim));
    return Hyperplane::make(h, -w[dim]);
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<Point> pick(const PointSet& V, const std::vector<std::size_t>& idx) {
    std::vector<Point> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(V[i]);
    return out;
}

bool satisfies(const Point& x, const std::vector<Vec>& equations, std::size_t dim) {
    for (const auto& w : equations) {
        Scalar acc = w[dim];
        for (std::size_t j = 0; j < dim; ++j)
            if (!w[j].is_zero()) acc += w[j] * x[j];
        if (!acc.is_zero()) return false;
    }
    return true;
}

}  // namespace

long affine_dimension(const PointSet& V) {
    if (V.empty()) return -1;
    return static_cast<long>(rank(augmented(V.points(), V.dim()))) - 1;
}

std::vector<Hyperplane> hyperplanes_through(const std::vector<Point>& pts, std::size_t dim) {
    auto kernel = nullspace(augmented(pts, dim));
    if (kernel.size() != 1) return {};
    return {from_kernel(kernel.front(), dim)};
}

FlatSubset max_flat_subset(const PointSet& V, std::size_t l) {
    const std::size_t d = V.dim();
    if (l > d) throw std::invalid_argument("flat dimension exceeds ambient dimension");
    FlatSubset best;
    const std::size_t n = V.size();
    if (n == 0) return best;

    auto whole = nullspace(augmented(V.points(), d));
    if (affine_dimension(V) <= static_cast<long>(l)) {
        best.count = n;
        for (std::size_t i = 0; i < n; ++i) best.members.push_back(i);
        if (!whole.empty()) best.hyperplane = from_kernel(whole.front(), d);
        return best;
    }

    std::vector<std::size_t> combo(l + 1);
    for (std::size_t k = 0; k <= l; ++k) combo[k] = k;
    do {
        auto equations = nullspace(augmented(pick(V, combo), d));
        if (equations.size() != d - l) continue;  // affinely dependent subset
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i)
            if (satisfies(V[i], equations, d)) members.push_back(i);
        // The lowest-index spanning subset of a flat is the first to find it.
        if (members.size() > best.count) {
            best.count = members.size();
            best.members = std::move(members);
            if (l + 1 == d) best.hyperplane = from_kernel(equations.front(), d);
        }
    } while (next_combination(combo, n));
    return best;
}

FlatSubset max_hyperplane_subset(const PointSet& V) {
    if (V.dim() == 0) throw std::invalid_argument("max_hyperplane_subset needs dim >= 1");
    FlatSubset out = max_flat_subset(V, V.dim() - 1);
    if (out.count == 0) {
        Vec e1(V.dim());
        e1[0] = 1;
        out.hyperplane = Hyperplane::make(e1, 0);
    }
    return out;
}

}  // namespace richlines
