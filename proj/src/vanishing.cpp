#include "richlines/vanishing.hpp"

#include "richlines/exact_matrix.hpp"
#include "richlines/incidence.hpp"
#include "richlines/veronese.hpp"

#include <algorithm>
#include <stdexcept>

namespace richlines {

namespace {

mpq_class upow(std::size_t base, std::size_t exp) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), base, exp);
    return mpq_class(z);
}

mpq_class as_q(std::size_t v) { return mpq_class(static_cast<unsigned long>(v)); }

}  // namespace

Constants Constants::defaults(std::size_t d) {
    Constants c;
    c.K = 32 * upow(2 * d, d);
    c.C = upow(d, 3 * d);
    c.C_prime = c.C / 2048;
    return c;
}

std::optional<VanishingPoly> find_vanishing_poly(const PointSet& V, std::size_t max_deg) {
    if (V.dim() == 0) throw std::invalid_argument("find_vanishing_poly needs dim >= 1");
    if (V.empty()) {
        Polynomial one = Polynomial::constant(V.dim(), 1);
        return VanishingPoly{0, 1, one};
    }
    for (std::size_t delta = 1; delta <= max_deg; ++delta) {
        // More points than monomials and full rank means no kernel; the check is the rank itself.
        auto kernel = nullspace(embed(V, delta));
        if (kernel.empty()) continue;
        const MonomialBasis basis(V.dim(), delta);
        VanishingPoly out{delta, kernel.size(), basis.polynomial(kernel.front())};
        for (const auto& p : V)
            if (!out.f.eval(p).is_zero()) throw std::logic_error("kernel polynomial does not vanish on V");
        return out;
    }
    return std::nullopt;
}

LemmaResult lemma_findpoly(const PointSet& V, std::size_t r, LemmaMode mode, const Constants& constants) {
    if (r < 2) throw std::invalid_argument("lemma_findpoly needs r >= 2");
    return lemma_findpoly(V, rich_lines(V, r), r, mode, constants);
}

LemmaResult lemma_findpoly(const PointSet& V, const std::vector<Line>& lines, std::size_t r, LemmaMode mode,
                           const Constants& constants) {
    if (r < 2) throw std::invalid_argument("lemma_findpoly needs r >= 2");
    if (lines.empty()) throw std::invalid_argument("lemma_findpoly: no r-rich lines");

    LemmaResult res;
    auto& c = res.certificate;
    c.n = V.size();
    c.d = V.dim();
    c.r = r;
    c.line_count = lines.size();

    const auto degrees = line_degrees(V.size(), lines);
    c.min_lines_per_point = *std::min_element(degrees.begin(), degrees.end());
    c.max_lines_per_point = *std::max_element(degrees.begin(), degrees.end());
    const std::size_t exponent = mode == LemmaMode::plain ? c.d - 2 : c.d - 1;
    if (c.d < 2 && mode == LemmaMode::plain)
        c.required_k = constants.K * as_q(c.n) * upow(r, 2 - c.d);
    else
        c.required_k = constants.K * as_q(c.n) / upow(r, exponent);
    c.hypothesis_ok = as_q(c.min_lines_per_point) >= c.required_k;
    if (mode == LemmaMode::bounded && c.max_lines_per_point > 8 * c.min_lines_per_point) {
        c.hypothesis_ok = false;
        c.warnings.push_back("per-point line counts are not within [k, 8k]");
    }
    if (r < 4) {
        c.hypothesis_ok = false;
        c.warnings.push_back("r < 4: the vanishing guarantee does not apply");
    }
    if (!c.hypothesis_ok) c.warnings.push_back("hypothesis not met; the certificate is informational");

    Assembly as = assemble(V, lines, r);
    c.tuples = as.A.row_count();
    c.params = as.A.params;
    c.max_pair_multiplicity = as.max_pair_multiplicity;
    c.product_is_zero = as.product_is_zero;
    c.rank_m = rank(as.M);
    c.monomials = as.M.cols();
    const RankBoundReport rb = rank_bound_check(as.A, c.rank_m);
    c.rank_a = rb.rank_a;
    c.column_bound = rb.column_bound;
    c.row_bound = rb.row_bound;
    c.bounds_vacuous = rb.vacuous;
    c.column_bound_holds = rb.column_bound_holds;
    c.row_bound_holds = rb.row_bound_holds;
    c.rank_sum_ok = rb.rank_sum_ok;
    c.deficient = c.rank_m < c.monomials;

    res.poly = find_vanishing_poly(V, r - 2);
    if (c.deficient && !res.poly) throw std::logic_error("rank-deficient M without a vanishing polynomial");
    return res;
}

bool vanishes_on_line(const Polynomial& f, const Line& line) {
    const long deg = f.degree();
    if (deg < 0) return true;
    for (long t = 0; t <= deg; ++t)
        if (!f.eval(line.at(Scalar(t))).is_zero()) return false;
    return true;
}

namespace {

std::optional<Hyperplane> hyperplane_from_directions(const std::vector<Vec>& rows, const Point& v) {
    const std::size_t d = v.size();
    auto kernel = nullspace(ExactMatrix::from_rows(rows, d));
    if (kernel.size() != 1) return std::nullopt;
    return Hyperplane::make(kernel.front(), dot(v, kernel.front()));
}

struct HyperplaneSearch {
    const PointSet& V;
    const Point& v;
    std::optional<Hyperplane> best;
    std::size_t best_count = 0;

    void consider(const Hyperplane& h) {
        const std::size_t count = h.members(V).size();
        if (!best || count > best_count) {
            best = h;
            best_count = count;
        }
    }

    void extend(std::vector<Vec>& rows, std::size_t current_rank, std::size_t from) {
        const std::size_t d = v.size();
        if (current_rank + 1 == d) {
            consider(*hyperplane_from_directions(rows, v));
            return;
        }
        for (std::size_t i = from; i < V.size(); ++i) {
            rows.push_back(V[i] - v);
            const std::size_t rk = rank(ExactMatrix::from_rows(rows, d));
            if (rk > current_rank) extend(rows, rk, i + 1);
            rows.pop_back();
        }
    }
};

}  // namespace

std::optional<Hyperplane> best_hyperplane_through(const PointSet& V, const Point& v, const std::vector<Vec>& dirs) {
    const std::size_t d = v.size();
    std::vector<Vec> rows(dirs);
    const std::size_t rk = rows.empty() ? 0 : rank(ExactMatrix::from_rows(rows, d));
    if (rk >= d) return std::nullopt;
    HyperplaneSearch search{V, v, std::nullopt, 0};
    search.extend(rows, rk, 0);
    if (!search.best) {
        // V adds nothing beyond the directions: take any hyperplane containing them.
        auto kernel = rows.empty() ? nullspace(ExactMatrix(1, d)) : nullspace(ExactMatrix::from_rows(rows, d));
        search.best = Hyperplane::make(kernel.front(), dot(v, kernel.front()));
    }
    return search.best;
}

Classification classify_flat_points(const PointSet& V, const std::vector<Line>& lines, const Polynomial& f) {
    if (f.dim() != V.dim()) throw std::invalid_argument("polynomial dimension does not match points");
    for (const auto& line : lines)
        if (!vanishes_on_line(f, line)) throw std::invalid_argument("polynomial does not vanish on a line");

    const std::size_t d = V.dim();
    std::vector<std::vector<std::size_t>> through(V.size());
    for (std::size_t li = 0; li < lines.size(); ++li)
        for (auto p : lines[li].incident) through.at(p).push_back(li);
    const auto grad = f.gradient();

    Classification out;
    for (std::size_t i = 0; i < V.size(); ++i) {
        PointClass pc;
        pc.point = i;
        pc.lines = through[i];
        std::vector<Vec> dirs;
        for (auto li : pc.lines) dirs.push_back(lines[li].dir);
        pc.direction_rank = dirs.empty() ? 0 : rank(ExactMatrix::from_rows(dirs, d));
        pc.kind = pc.direction_rank <= d - 1 ? PointKind::flat : PointKind::joint;
        for (const auto& g : grad) pc.gradient.push_back(g.eval(V[i]));
        pc.gradient_zero = std::all_of(pc.gradient.begin(), pc.gradient.end(), [](const Scalar& s) { return s.is_zero(); });
        if (pc.kind == PointKind::flat) {
            ++out.flat_count;
            pc.witness = best_hyperplane_through(V, V[i], dirs);
        } else {
            ++out.joint_count;
            if (!pc.gradient_zero) out.joints_have_zero_gradient = false;
        }
        out.points.push_back(std::move(pc));
    }
    return out;
}

ProductProjection hyperplane_from_product(const Hyperplane& H, const PointSet& V, std::size_t l) {
    const std::size_t d = V.dim();
    if (l == 0) throw std::invalid_argument("product exponent must be >= 1");
    if (H.dim() != d * l) throw std::invalid_argument("hyperplane dimension is not d*l");
    if (is_zero(H.normal)) throw std::invalid_argument("hyperplane normal is zero");
    const std::size_t n = V.size();

    ProductProjection out;
    out.block = pivot_index(H.normal) / d;
    auto block = [&](std::size_t i) {
        return Vec(H.normal.begin() + static_cast<std::ptrdiff_t>(i * d),
                   H.normal.begin() + static_cast<std::ptrdiff_t>((i + 1) * d));
    };
    const Vec lead = block(out.block);

    // Enumerate every assignment a of the other l-1 factors (odometer, lexicographic).
    std::vector<std::size_t> a(l - 1, 0);
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < l; ++i)
        if (i != out.block) others.push_back(i);
    std::vector<Vec> blocks;
    for (auto i : others) blocks.push_back(block(i));

    // <x, lead> takes one value per point of V; precompute.
    std::vector<Scalar> lead_vals;
    for (const auto& x : V) lead_vals.push_back(dot(x, lead));

    std::size_t best_count = 0;
    std::vector<std::size_t> best_a;
    Scalar best_offset;
    bool first = true;
    if (n == 0) throw std::invalid_argument("hyperplane misses the product set");
    for (;;) {
        Scalar offset = H.offset;
        for (std::size_t s = 0; s < a.size(); ++s) offset -= dot(V[a[s]], blocks[s]);
        std::size_t count = 0;
        for (const auto& val : lead_vals)
            if (val == offset) ++count;
        out.product_hits += count;
        if (first || count > best_count) {
            best_count = count;
            best_a = a;
            best_offset = offset;
            first = false;
        }
        std::size_t s = a.size();
        while (s > 0 && ++a[s - 1] == n) a[--s] = 0;
        if (s == 0) break;
    }
    if (out.product_hits == 0) throw std::invalid_argument("hyperplane misses the product set");

    out.anchor = best_a;
    out.hyperplane = Hyperplane::make(lead, best_offset);
    out.subset = out.hyperplane.members(V);
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), n, l);
    out.delta = mpq_class(mpz_class(static_cast<unsigned long>(out.product_hits)), total);
    out.delta.canonicalize();

    // x in V cap H' iff the product point with x in the lead block and a elsewhere lies on H.
    std::size_t matched = 0;
    for (auto x : out.subset) {
        Point full(d * l);
        for (std::size_t c = 0; c < d; ++c) full[out.block * d + c] = V[x][c];
        for (std::size_t s = 0; s < others.size(); ++s)
            for (std::size_t c = 0; c < d; ++c) full[others[s] * d + c] = V[best_a[s]][c];
        if (H.contains(full)) ++matched;
    }
    out.correspondence_ok = matched == out.subset.size() && out.subset.size() == best_count;
    out.density_ok = as_q(out.subset.size()) >= out.delta * as_q(n);
    return out;
}

}  // namespace richlines
