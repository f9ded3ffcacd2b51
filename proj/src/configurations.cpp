#include "richlines/configurations.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace richlines {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap, const std::string& what) {
    std::size_t out = 1;
    for (std::size_t k = 0; k < exp; ++k) {
        if (base != 0 && out > cap / base + 1) check_size_cap(cap + 1, cap, what);
        out *= base;
    }
    check_size_cap(out, cap, what);
    return out;
}

// Odometer over {0..base-1}^len, last digit fastest (lexicographic).
bool advance(std::vector<std::size_t>& digits, std::size_t base) {
    for (std::size_t k = digits.size(); k-- > 0;) {
        if (++digits[k] < base) return true;
        digits[k] = 0;
    }
    return false;
}

void require_distinct(const Vec& values, const char* name) {
    std::set<Scalar> seen(values.begin(), values.end());
    if (seen.size() != values.size()) throw std::invalid_argument(std::string(name) + " has repeated entries");
}

}  // namespace

PointSet grid(std::size_t d, std::size_t h, std::size_t cap) {
    if (d < 1 || h < 1) throw std::invalid_argument("grid needs d >= 1 and h >= 1");
    checked_power(h, d, cap, "grid(" + std::to_string(d) + "," + std::to_string(h) + ")");
    PointSet out(d);
    std::vector<std::size_t> digits(d, 0);
    do {
        Point p(d);
        for (std::size_t k = 0; k < d; ++k) p[k] = static_cast<long>(digits[k] + 1);
        out.add(std::move(p));
    } while (advance(digits, h));
    return out;
}

PointSet pasted_grids(std::size_t d, std::size_t l, std::size_t copies, std::size_t h, std::size_t cap) {
    if (!(1 < l && l < d)) throw std::invalid_argument("pasted_grids needs 1 < l < d");
    if (copies < 1 || h < 1) throw std::invalid_argument("pasted_grids needs copies >= 1 and h >= 1");
    std::size_t per_copy = checked_power(h, l, cap, "pasted_grids");
    check_size_cap(per_copy * copies, cap, "pasted_grids");

    PointSet out(d);
    for (std::size_t c = 1; c <= copies; ++c) {
        const long shift = static_cast<long>(h * (c - 1) * (c - 1));
        std::vector<std::size_t> digits(l, 0);
        do {
            Point p(d);
            for (std::size_t k = 0; k < l; ++k) p[k] = static_cast<long>(digits[k] + 1);
            p[0] += shift;
            for (std::size_t k = l; k < d; ++k) p[k] = static_cast<long>(c);
            out.add(std::move(p));
        } while (advance(digits, h));
    }
    return out;
}

PointSet power(const PointSet& V, std::size_t l, std::size_t cap) {
    if (l < 1) throw std::invalid_argument("power needs l >= 1");
    checked_power(V.size(), l, cap, "power");
    PointSet out(V.dim() * l);
    if (V.empty()) return out;
    std::vector<std::size_t> digits(l, 0);
    do {
        Point p;
        p.reserve(V.dim() * l);
        for (auto idx : digits) p.insert(p.end(), V[idx].begin(), V[idx].end());
        out.add(std::move(p));
    } while (advance(digits, V.size()));
    return out;
}

Vec sum_dilate(const Vec& A, const Scalar& t) {
    std::set<Scalar> values;
    for (const auto& a : A)
        for (const auto& b : A) values.insert(a + t * b);
    return Vec(values.begin(), values.end());
}

SumProductConfig sumproduct_config(const Vec& A, const Vec& Q, std::size_t d, std::size_t cap) {
    if (d < 2) throw std::invalid_argument("sumproduct_config needs d >= 2");
    if (A.empty()) throw std::invalid_argument("sumproduct_config needs a nonempty A");
    require_distinct(A, "A");
    require_distinct(Q, "Q");
    if (std::find(Q.begin(), Q.end(), Scalar(0)) == Q.end())
        throw std::invalid_argument("sumproduct_config needs 0 in Q");

    std::size_t total = 0;
    std::vector<Vec> fibres;
    for (const auto& t : Q) {
        fibres.push_back(sum_dilate(A, t));
        total += checked_power(fibres.back().size(), d - 1, cap, "sumproduct_config");
        check_size_cap(total, cap, "sumproduct_config");
    }

    SumProductConfig cfg;
    cfg.points = PointSet(d);
    for (std::size_t q = 0; q < Q.size(); ++q) {
        const Vec& fibre = fibres[q];
        std::vector<std::size_t> digits(d - 1, 0);
        do {
            Point p(d);
            p[0] = Q[q];
            for (std::size_t k = 1; k < d; ++k) p[k] = fibre[digits[k - 1]];
            std::size_t idx = cfg.points.add(std::move(p));
            if (Q[q].is_zero()) {
                bool in_a = true;
                for (std::size_t k = 1; k < d && in_a; ++k)
                    in_a = std::find(A.begin(), A.end(), cfg.points[idx][k]) != A.end();
                if (in_a) cfg.v0.push_back(idx);
            }
        } while (advance(digits, fibre.size()));
    }

    // Lines through a in V_0 = {0} x A^{d-1} with direction (1, b) for b in A^{d-1}.
    std::vector<std::size_t> a_digits(d - 1, 0);
    do {
        Point a(d);
        for (std::size_t k = 1; k < d; ++k) a[k] = A[a_digits[k - 1]];
        std::vector<std::size_t> b_digits(d - 1, 0);
        do {
            Vec dir(d);
            dir[0] = 1;
            for (std::size_t k = 1; k < d; ++k) dir[k] = A[b_digits[k - 1]];
            Line line = line_through(a, dir);
            for (const auto& t : Q)
                if (auto idx = cfg.points.index_of(line.at(t))) line.incident.push_back(*idx);
            std::sort(line.incident.begin(), line.incident.end());
            cfg.lines.push_back(std::move(line));
        } while (advance(b_digits, A.size()));
    } while (advance(a_digits, A.size()));
    return cfg;
}

PointSet random_points(std::size_t d, std::size_t n, std::int64_t range, std::uint64_t seed) {
    if (range < 0) throw std::invalid_argument("negative coordinate range");
    std::size_t universe = checked_power(static_cast<std::size_t>(2 * range + 1), d, SIZE_MAX / 4, "random_points");
    if (n > universe) throw std::invalid_argument("not enough lattice points for the requested sample");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coord(-range, range);
    PointSet out(d);
    while (out.size() < n) {
        Point p(d);
        for (auto& x : p) x = static_cast<long>(coord(rng));
        if (!out.contains(p)) out.add(std::move(p));
    }
    return out;
}

PointSet generate(const GeneratorSpec& spec, std::size_t cap) {
    if (spec.kind == "grid") return grid(spec.d, spec.h, cap);
    if (spec.kind == "pasted") return pasted_grids(spec.d, spec.l, spec.copies, spec.h, cap);
    if (spec.kind == "power") {
        PointSet base = spec.base_kind == "grid" ? grid(spec.base_d, spec.h, cap)
                                                 : random_points(spec.base_d, spec.n, spec.coord_range, spec.seed);
        return power(base, spec.l, cap);
    }
    if (spec.kind == "sumproduct") return sumproduct_config(spec.A, spec.Q, spec.d, cap).points;
    if (spec.kind == "random") {
        check_size_cap(spec.n, cap, "random");
        return random_points(spec.d, spec.n, spec.coord_range, spec.seed);
    }
    throw std::invalid_argument("unknown generator kind '" + spec.kind + "'");
}

}  // namespace richlines
