#include "richlines/suites.hpp"

#include "richlines/bounds.hpp"
#include "richlines/configurations.hpp"
#include "richlines/design_matrix.hpp"
#include "richlines/exact_matrix.hpp"
#include "richlines/incidence.hpp"
#include "richlines/refinement.hpp"
#include "richlines/vanishing.hpp"
#include "richlines/veronese.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

namespace richlines {

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Json to_json(const SuiteReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    Json j;
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    j["passed"] = report.passed();
    j["checks"] = std::move(checks);
    return j;
}

namespace {

bool parallel(const Vec& u, const Vec& w) {
    for (std::size_t a = 0; a < u.size(); ++a)
        for (std::size_t b = a + 1; b < u.size(); ++b)
            if (u[a] * w[b] != u[b] * w[a]) return false;
    return true;
}

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Vec random_vec(std::mt19937_64& rng, std::size_t d, long lo, long hi) {
    Vec v;
    for (std::size_t k = 0; k < d; ++k) v.push_back(uniform(rng, lo, hi));
    return v;
}

Vec nonzero_vec(std::mt19937_64& rng, std::size_t d, long lo, long hi) {
    Vec v;
    do v = random_vec(rng, d, lo, hi);
    while (is_zero(v));
    return v;
}

PointSet random_1d(std::mt19937_64& rng, std::size_t n, long range) {
    std::set<long> values;
    while (values.size() < n) values.insert(uniform(rng, 0, range));
    PointSet V(1);
    for (long v : values) V.add({Scalar(v)});
    return V;
}

bool next_subset(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;)
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    return false;
}

CheckResult check(std::string name, bool passed, std::string detail) {
    return {std::move(name), passed, std::move(detail)};
}

// ---- claims ---------------------------------------------------------------

CheckResult collinear_veronese(std::mt19937_64& rng) {
    std::size_t failures = 0;
    for (int sample = 0; sample < 100; ++sample) {
        const std::size_t r = 2 + static_cast<std::size_t>(sample % 5);
        const std::size_t d = 2 + static_cast<std::size_t>((sample / 5) % 2);
        const Vec base = random_vec(rng, d, -5, 5);
        const Vec dir = nonzero_vec(rng, d, -3, 3);
        std::set<long> ts;
        while (ts.size() < r + 2) ts.insert(uniform(rng, -10, 10));
        PointSet V(d);
        for (long t : ts) V.add(base + Scalar(t) * dir);
        const ExactMatrix M = embed(V, r);
        if (rank(M) != r + 1) ++failures;
        std::vector<std::size_t> c(r + 1);
        for (std::size_t i = 0; i <= r; ++i) c[i] = i;
        do {
            if (rank(M.select_rows(c)) != r + 1) ++failures;
        } while (next_subset(c, r + 2));
    }
    return check("collinear_veronese_rank", failures == 0, std::to_string(failures) + " failures over 100 samples");
}

CheckResult design_assembly(const PointSet& V, std::size_t r, const std::string& label) {
    const auto lines = rich_lines(V, r);
    const Assembly as = assemble(V, lines, r);
    const RankBoundReport rb = rank_bound_check(as.A, rank(as.M));
    const bool ok = as.product_is_zero && as.A.params.q <= r && as.A.params.t <= 2 && as.max_pair_multiplicity <= 2 &&
                    as.every_point_covered && rb.ok();
    std::ostringstream os;
    os << label << ": m=" << as.A.row_count() << " q=" << as.A.params.q << " k=" << as.A.params.k
       << " t=" << as.A.params.t << " rank(A)=" << rb.rank_a << " AM=0:" << as.product_is_zero;
    return check("design_matrix_" + label, ok, os.str());
}

CheckResult structured_designs(std::mt19937_64& rng) {
    std::size_t violations = 0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 6, 14));
        const std::size_t q = static_cast<std::size_t>(uniform(rng, 2, 4));
        const std::size_t k = static_cast<std::size_t>(uniform(rng, 1, 3));
        const DesignMatrix A = structured_random_design(n, q, k, rng());
        if (!rank_bound_check(A).ok()) ++violations;
    }
    return check("design_rank_bounds_random", violations == 0, std::to_string(violations) + " violations over 100 matrices");
}

IncidenceGraph random_bipartite(std::mt19937_64& rng) {
    IncidenceGraph g;
    const std::size_t a = static_cast<std::size_t>(uniform(rng, 1, 40));
    const std::size_t b = static_cast<std::size_t>(uniform(rng, 1, 40));
    for (std::size_t i = 0; i < a; ++i) g.left.push_back(i);
    for (std::size_t i = 0; i < b; ++i) g.right.push_back(i);
    const double density = std::uniform_real_distribution<double>(0.02, 0.6)(rng);
    std::bernoulli_distribution edge(density);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            if (edge(rng)) g.edges.emplace_back(i, j);
    if (g.edges.empty()) g.edges.emplace_back(0, 0);
    return g;
}

CheckResult refinement_graphs(std::mt19937_64& rng) {
    std::size_t failures = 0;
    for (int i = 0; i < 500; ++i) {
        const IncidenceGraph g = random_bipartite(rng);
        const RefinementResult R = refine(g);
        if (!check_refinement(g, R).ok()) ++failures;
        const RefinementResult again = refine(R.induced());
        if (again.left != R.left || again.right != R.right) ++failures;
    }
    return check("refinement_random_graphs", failures == 0, std::to_string(failures) + " failures over 500 graphs");
}

CheckResult progression_lifting(std::mt19937_64& rng) {
    std::size_t failures = 0;
    for (int i = 0; i < 20; ++i) {
        const PointSet V = random_1d(rng, static_cast<std::size_t>(uniform(rng, 5, 10)), 15);
        const std::size_t r = 3;
        const APCount aps = count_aps(V, r);
        const PointSet W = progression_lift(V, r);
        const auto lines = rich_lines(W, r);
        std::set<std::vector<std::size_t>> lifted;
        for (const auto& ap : aps.progressions) lifted.insert(lift_progression(ap, W, V.size()).incident);
        if (aps.count > lines.size() || lifted.size() != aps.count) ++failures;
    }
    return check("progression_lifting", failures == 0, std::to_string(failures) + " failures over 20 sets");
}

CheckResult progression_products(std::mt19937_64& rng) {
    std::size_t failures = 0;
    for (int i = 0; i < 20; ++i) {
        const PointSet V = random_1d(rng, static_cast<std::size_t>(uniform(rng, 4, 9)), 12);
        const std::size_t a = count_aps(V, 3, false).count;
        const std::size_t b = count_aps(power(V, 2), 3, false).count;
        if (b < a * a) ++failures;
    }
    return check("progression_products", failures == 0, std::to_string(failures) + " failures over 20 sets");
}

CheckResult product_hyperplanes(std::mt19937_64& rng) {
    std::size_t failures = 0;
    for (int i = 0; i < 20; ++i) {
        const std::size_t d = 1 + static_cast<std::size_t>(i % 2);
        PointSet V(d);
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 3, 6));
        while (V.size() < n) {
            Vec p = random_vec(rng, d, 0, 9);
            if (!V.contains(p)) V.add(std::move(p));
        }
        // A random hyperplane of C^(2d) through a random point of V^2.
        const Vec normal = nonzero_vec(rng, 2 * d, -2, 2);
        Vec through = V[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1))];
        const Vec& second = V[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1))];
        through.insert(through.end(), second.begin(), second.end());
        const Hyperplane H = Hyperplane::make(normal, dot(through, normal));
        const ProductProjection pp = hyperplane_from_product(H, V, 2);
        if (!pp.density_ok || !pp.correspondence_ok) ++failures;
    }
    return check("product_hyperplanes", failures == 0, std::to_string(failures) + " failures over 20 instances");
}

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t d, std::size_t max_deg, bool homogeneous) {
    Polynomial f(d);
    const MonomialBasis basis(d, max_deg);
    const std::size_t top = static_cast<std::size_t>(uniform(rng, homogeneous ? 1 : 0, static_cast<long>(max_deg)));
    while (f.is_zero()) {
        for (const auto& e : basis.exponents()) {
            const unsigned deg = total_degree(e);
            if (deg > top || (homogeneous && deg != top)) continue;
            f.add_term(e, uniform(rng, -3, 3));
        }
    }
    return f;
}

CheckResult zero_counts(std::mt19937_64& rng) {
    std::size_t failures = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 2);
        const std::size_t size = static_cast<std::size_t>(uniform(rng, 1, 8));
        std::set<long> s;
        while (s.size() < size) s.insert(uniform(rng, -6, 6));
        Vec S;
        for (long v : s) S.push_back(v);
        const Polynomial f = random_polynomial(rng, d, 4, false);
        if (sz_zero_count(f, S, false) > sz_bound(f, S.size(), false)) ++failures;
        const Polynomial h = random_polynomial(rng, d, 4, true);
        if (sz_zero_count(h, S, true) > sz_bound(h, S.size(), true)) ++failures;
    }
    return check("zero_count_bounds", failures == 0, std::to_string(failures) + " failures over 200 polynomial pairs");
}

CheckResult sumproduct_family() {
    const Vec A{1, 2, 3};
    const Vec Q{0, 1, 2};
    const auto cfg = sumproduct_config(A, Q, 2);
    const std::set<std::size_t> v0(cfg.v0.begin(), cfg.v0.end());
    bool ok = cfg.lines.size() == 9;
    for (const auto& line : cfg.lines) {
        const auto hits = std::count_if(line.incident.begin(), line.incident.end(),
                                        [&](std::size_t i) { return v0.count(i) > 0; });
        ok = ok && line.incident.size() >= Q.size() && hits == 1;
    }
    return check("sumproduct_family", ok, std::to_string(cfg.lines.size()) + " lines over " +
                                              std::to_string(cfg.points.size()) + " points");
}

// ---- bounds ---------------------------------------------------------------

CheckResult bound_arithmetic() {
    const auto a = bound_terms(100, 5, 2);
    const auto b = bound_terms(81, 3, 4);
    const bool ok = find_term(a, "n^2/r^3") == mpq_class(80) && find_term(a, "n/r") == mpq_class(20) &&
                    find_term(b, "n^2/r^5") == mpq_class(27);
    return check("bound_term_arithmetic", ok, "n=100 r=5 d=2 and n=81 r=3 d=4");
}

CheckResult grid_counts() {
    bool ok = rich_lines(grid(2, 3), 3).size() == 8;
    std::ostringstream os;
    os << "grid(2,3) r=3: 8;";
    const PointSet G = grid(2, 10);
    for (std::size_t r : {3, 4, 5}) {
        const auto fast = rich_lines(G, r);
        const auto slow = reference::rich_lines(G, r);
        ok = ok && incidence_lists(fast) == incidence_lists(slow);
        os << " grid(2,10) r=" << r << ": " << fast.size() << ";";
    }
    return check("grid_rich_line_counts", ok, os.str());
}

CheckResult grid_scaling() {
    std::vector<std::pair<mpq_class, mpq_class>> pts;
    std::ostringstream os;
    for (std::size_t h : {10, 20, 30}) {
        const PointSet G = grid(2, h);
        const std::size_t count = rich_lines(G, 3).size();
        pts.emplace_back(mpq_class(static_cast<unsigned long>(G.size())), mpq_class(static_cast<unsigned long>(count)));
        os << "h=" << h << ": " << count << "; ";
    }
    const double slope = loglog_slope(pts);
    os << "slope " << slope;
    return check("grid_scaling_slope", slope >= 1.7 && slope <= 2.3, os.str());
}

CheckResult pasted_counts() {
    const std::size_t pasted = rich_lines(pasted_grids(3, 2, 2, 3), 3).size();
    const std::size_t single = rich_lines(grid(2, 3), 3).size();
    return check("pasted_grid_counts", pasted == 2 * single,
                 std::to_string(pasted) + " vs 2 x " + std::to_string(single));
}

CheckResult small_audit(std::mt19937_64& rng) {
    std::size_t mismatches = 0;
    for (int i = 0; i < 10; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 2);
        const PointSet V = random_points(d, static_cast<std::size_t>(uniform(rng, 10, 45)), 3, rng());
        if (incidence_lists(rich_lines(V, 3)) != audit_rich_lines(V, 3)) ++mismatches;
    }
    return check("rich_line_audit", mismatches == 0, std::to_string(mismatches) + " mismatches over 10 sets");
}

// Appends the result of `run`; with RICHLINES_SUITE_TIMING set, also logs its wall time to stderr.
void run_check(SuiteReport& rep, const std::function<CheckResult()>& run) {
    const auto start = std::chrono::steady_clock::now();
    rep.checks.push_back(run());
    if (std::getenv("RICHLINES_SUITE_TIMING")) {
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        std::cerr << rep.suite << "/" << rep.checks.back().name << ": " << dt.count() << " s\n";
    }
}

}  // namespace

std::vector<std::vector<std::size_t>> audit_rich_lines(const PointSet& V, std::size_t r) {
    std::set<std::vector<std::size_t>> found;
    for (std::size_t i = 0; i < V.size(); ++i)
        for (std::size_t j = i + 1; j < V.size(); ++j) {
            const Vec u = V[j] - V[i];
            std::vector<std::size_t> members;
            for (std::size_t k = 0; k < V.size(); ++k)
                if (k == i || k == j || parallel(u, V[k] - V[i])) members.push_back(k);
            if (members.size() >= r) found.insert(members);
        }
    return {found.begin(), found.end()};
}

std::vector<std::vector<std::size_t>> incidence_lists(const std::vector<Line>& lines) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& l : lines) out.push_back(l.incident);
    std::sort(out.begin(), out.end());
    return out;
}

SuiteReport run_claims_suite(std::uint64_t seed) {
    SuiteReport rep;
    rep.suite = "claims";
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    run_check(rep, [&] { return collinear_veronese(rng); });
    run_check(rep, [&] { return design_assembly(grid(2, 4), 3, "grid_2_4"); });
    run_check(rep, [&] { return design_assembly(grid(3, 3), 3, "grid_3_3"); });
    run_check(rep, [&] { return structured_designs(rng); });
    run_check(rep, [&] { return refinement_graphs(rng); });
    run_check(rep, [&] { return progression_lifting(rng); });
    run_check(rep, [&] { return progression_products(rng); });
    run_check(rep, [&] { return product_hyperplanes(rng); });
    run_check(rep, [&] { return zero_counts(rng); });
    run_check(rep, [&] { return sumproduct_family(); });
    return rep;
}

SuiteReport run_bounds_suite(std::uint64_t seed) {
    SuiteReport rep;
    rep.suite = "bounds";
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    run_check(rep, [&] { return bound_arithmetic(); });
    run_check(rep, [&] { return grid_counts(); });
    run_check(rep, [&] { return grid_scaling(); });
    run_check(rep, [&] { return pasted_counts(); });
    run_check(rep, [&] { return small_audit(rng); });
    return rep;
}

}  // namespace richlines
