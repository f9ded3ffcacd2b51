#include "richlines/design_matrix.hpp"

#include "richlines/flats.hpp"
#include "richlines/veronese.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <random>
#include <stdexcept>

namespace richlines {

std::vector<Tuple> tuple_cover(const std::vector<std::size_t>& line_points, std::size_t r) {
    if (r == 0 || line_points.size() < r) throw std::invalid_argument("tuple cover needs at least r points");
    std::vector<Tuple> out;
    const std::size_t n = line_points.size();
    for (std::size_t start = 0; start + r <= n; start += r)
        out.emplace_back(line_points.begin() + static_cast<std::ptrdiff_t>(start),
                         line_points.begin() + static_cast<std::ptrdiff_t>(start + r));
    if (n % r != 0) out.emplace_back(line_points.end() - static_cast<std::ptrdiff_t>(r), line_points.end());
    return out;
}

TupleCover cover_lines(const PointSet& V, const std::vector<Line>& lines, std::size_t r) {
    TupleCover cover;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        auto tuples = tuple_cover(order_along_line(lines[li], V), r);
        for (const auto& t : tuples) {
            cover.tuples.push_back(t);
            cover.line_of.push_back(li);
        }
        cover.per_line.push_back(std::move(tuples));
    }
    return cover;
}

Vec dependency_coeffs(const PointSet& V, const Tuple& tuple, std::size_t deg) {
    if (tuple.size() < 2) throw std::invalid_argument("dependency needs at least two points");
    std::vector<Point> pts;
    for (auto i : tuple) {
        if (i >= V.size()) throw std::out_of_range("tuple index out of range");
        pts.push_back(V[i]);
    }
    PointSet sub(V.dim(), pts);  // rejects duplicates
    if (affine_dimension(sub) > 1) throw std::invalid_argument("dependency points are not collinear");

    // Columns are the Veronese images; the kernel holds the dependencies.
    const ExactMatrix images = embed(sub, deg).transpose();
    auto kernel = nullspace(images);
    if (kernel.size() != 1) throw std::logic_error("dependency among collinear points is not unique");
    Vec alpha = kernel.front();
    for (const auto& a : alpha)
        if (a.is_zero()) throw std::logic_error("dependency has a zero coefficient");
    return alpha;
}

DesignParameters measure_design(const std::vector<SparseRow>& rows, std::size_t cols) {
    DesignParameters p;
    std::vector<std::vector<std::size_t>> col_rows(cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::size_t support = 0;
        for (const auto& [j, v] : rows[i]) {
            if (v.is_zero()) continue;
            ++support;
            col_rows[j].push_back(i);
        }
        p.q = std::max(p.q, support);
    }
    if (cols > 0) {
        p.k = col_rows.front().size();
        for (const auto& c : col_rows) p.k = std::min(p.k, c.size());
    }
    // Pairwise intersections: count co-occurrences row by row.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> together;
    for (const auto& row : rows) {
        std::vector<std::size_t> support;
        for (const auto& [j, v] : row)
            if (!v.is_zero()) support.push_back(j);
        for (std::size_t a = 0; a < support.size(); ++a)
            for (std::size_t b = a + 1; b < support.size(); ++b) {
                auto key = std::minmax(support[a], support[b]);
                p.t = std::max(p.t, ++together[{key.first, key.second}]);
            }
    }
    return p;
}

DesignCheck verify_design(const DesignMatrix& A, std::optional<DesignParameters> declared) {
    DesignCheck check;
    check.measured = measure_design(A.rows, A.cols);
    if (declared) {
        check.ok = check.measured.q <= declared->q && check.measured.k >= declared->k &&
                   check.measured.t <= declared->t;
    }
    return check;
}

std::size_t max_pair_multiplicity(const std::vector<Tuple>& tuples) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> count;
    std::size_t best = 0;
    for (const auto& t : tuples)
        for (std::size_t a = 0; a < t.size(); ++a)
            for (std::size_t b = a + 1; b < t.size(); ++b) {
                auto key = std::minmax(t[a], t[b]);
                best = std::max(best, ++count[{key.first, key.second}]);
            }
    return best;
}

Assembly assemble(const PointSet& V, const std::vector<Line>& lines, std::size_t r) {
    if (r < 2) throw std::invalid_argument("assemble needs r >= 2");
    for (const auto& line : lines)
        if (line.incident.size() < r) throw std::invalid_argument("assemble needs r-rich lines");

    Assembly out;
    out.A.cols = V.size();
    out.A.cover = cover_lines(V, lines, r);
    for (const auto& tuple : out.A.cover.tuples) {
        Vec alpha = dependency_coeffs(V, tuple, r - 2);
        SparseRow row;
        for (std::size_t j = 0; j < tuple.size(); ++j) row.emplace_back(tuple[j], alpha[j]);
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.A.rows.push_back(std::move(row));
    }
    out.A.params = measure_design(out.A.rows, out.A.cols);
    out.M = embed(V, r - 2);

    out.product_is_zero = true;
    for (const auto& row : out.A.rows) {
        for (std::size_t c = 0; c < out.M.cols() && out.product_is_zero; ++c) {
            Scalar acc;
            for (const auto& [j, a] : row) acc += a * out.M(j, c);
            out.product_is_zero = acc.is_zero();
        }
    }

    out.max_pair_multiplicity = max_pair_multiplicity(out.A.cover.tuples);
    const auto degrees_on_lines = [&] {
        std::vector<std::size_t> deg(V.size(), 0);
        for (const auto& line : lines)
            for (auto i : line.incident) ++deg[i];
        return deg;
    }();
    std::vector<std::size_t> in_tuples(V.size(), 0);
    for (const auto& t : out.A.cover.tuples)
        for (auto i : t) ++in_tuples[i];
    for (std::size_t i = 0; i < V.size(); ++i)
        if (in_tuples[i] < degrees_on_lines[i]) out.every_point_covered = false;
    return out;
}

RankBoundReport rank_bound_check(const DesignMatrix& A, std::optional<std::size_t> rank_m) {
    RankBoundReport rep;
    rep.n = A.cols;
    rep.m = A.rows.size();
    rep.params = measure_design(A.rows, A.cols);
    rep.rank_a = rank(A.dense());
    rep.rank_m = rank_m;
    const mpq_class n(static_cast<unsigned long>(rep.n));
    const mpq_class m(static_cast<unsigned long>(rep.m));
    const mpq_class t(static_cast<unsigned long>(rep.params.t));
    const mpq_class q2(static_cast<unsigned long>(rep.params.q * rep.params.q));
    if (rep.params.k == 0) {
        rep.vacuous = true;
    } else {
        const mpq_class k(static_cast<unsigned long>(rep.params.k));
        rep.column_bound = n - n * t * q2 / k;
        rep.row_bound = n - m * t * q2 / (k * k);
        const mpq_class ra(static_cast<unsigned long>(rep.rank_a));
        rep.column_bound_holds = ra >= rep.column_bound;
        rep.row_bound_holds = ra >= rep.row_bound;
    }
    if (rank_m) rep.rank_sum_ok = rep.rank_a + *rank_m <= rep.n;
    return rep;
}

DesignMatrix structured_random_design(std::size_t n, std::size_t q, std::size_t min_support, std::uint64_t seed) {
    if (q == 0 || q > n) throw std::invalid_argument("structured design needs 1 <= q <= n");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(1, 3);
    std::bernoulli_distribution negative(0.5);

    DesignMatrix A;
    A.cols = n;
    std::vector<std::size_t> support(n, 0);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> together;
    std::vector<std::size_t> all(n);
    for (std::size_t j = 0; j < n; ++j) all[j] = j;

    const std::size_t budget = 200 * n * std::max<std::size_t>(min_support, 1);
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        if (std::all_of(support.begin(), support.end(), [&](std::size_t s) { return s >= min_support; })) break;
        std::vector<std::size_t> cols;
        std::sample(all.begin(), all.end(), std::back_inserter(cols), static_cast<std::ptrdiff_t>(q), rng);
        // Favor rows that touch an under-supported column.
        if (std::none_of(cols.begin(), cols.end(), [&](std::size_t j) { return support[j] < min_support; }))
            continue;
        bool accept = true;
        for (std::size_t a = 0; a < q && accept; ++a)
            for (std::size_t b = a + 1; b < q && accept; ++b) {
                auto key = std::minmax(cols[a], cols[b]);
                auto it = together.find({key.first, key.second});
                if (it != together.end() && it->second >= 2) accept = false;
            }
        if (!accept) continue;
        SparseRow row;
        for (auto j : cols) {
            long v = entry(rng);
            row.emplace_back(j, Scalar(negative(rng) ? -v : v));
            ++support[j];
        }
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = a + 1; b < q; ++b) {
                auto key = std::minmax(cols[a], cols[b]);
                ++together[{key.first, key.second}];
            }
        A.rows.push_back(std::move(row));
    }
    A.params = measure_design(A.rows, A.cols);
    return A;
}

}  // namespace richlines
