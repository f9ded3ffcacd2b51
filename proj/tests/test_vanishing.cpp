#include "oracles.hpp"

#include "richlines/configurations.hpp"
#include "richlines/flats.hpp"
#include "richlines/incidence.hpp"
#include "richlines/pipeline.hpp"
#include "richlines/vanishing.hpp"
#include "richlines/veronese.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace richlines;

namespace {

PointSet circle25() {
    PointSet V(2);
    for (long x = -5; x <= 5; ++x)
        for (long y = -5; y <= 5; ++y)
            if (x * x + y * y == 25) V.add({x, y});
    return V;
}

Polynomial poly(std::size_t d, std::initializer_list<std::pair<Exponent, long>> terms) {
    Polynomial f(d);
    for (const auto& [e, c] : terms) f.add_term(e, c);
    return f;
}

Line axis_line(const Point& p, const Vec& dir, const PointSet& V) {
    Line l = line_through(p, dir);
    attach_incidences(l, V);
    return l;
}

}  // namespace

TEST(Constants, Defaults) {
    const Constants c = Constants::defaults(3);
    EXPECT_EQ(c.K, mpq_class(32 * 216));
    EXPECT_EQ(c.C, mpq_class(19683));
    EXPECT_EQ(c.C_prime, mpq_class(19683, 2048));
}

TEST(FindVanishingPoly, CircleHasUniqueQuadric) {
    const PointSet V = circle25();
    ASSERT_EQ(V.size(), 12u);
    const auto vp = find_vanishing_poly(V, 2);
    ASSERT_TRUE(vp.has_value());
    EXPECT_EQ(vp->degree, 2u);
    EXPECT_EQ(vp->kernel_dim, 1u);
    const Polynomial expected = poly(2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -25}});
    EXPECT_EQ(vp->f.monic(), expected.monic());
    for (const auto& p : V) EXPECT_TRUE(vp->f.eval(p).is_zero());
    // The oracle sees the same one-dimensional kernel.
    std::vector<Vec> rows;
    const MonomialBasis B(2, 2);
    for (const auto& p : V) {
        Vec row;
        for (const auto& e : B.exponents()) row.push_back(oracle::monomial(p, e));
        rows.push_back(row);
    }
    EXPECT_EQ(oracle::rank(rows), 5u);
}

TEST(FindVanishingPoly, Examples) {
    EXPECT_FALSE(find_vanishing_poly(oracle::points(2, {{0, 0}, {1, 0}, {0, 1}}), 1).has_value());
    // Fewer points than monomials always admit a vanishing polynomial.
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 2);
        const std::size_t delta = 1 + rng() % 3;
        const std::size_t n = 1 + rng() % (monomial_count(d, delta) - 1);
        const PointSet V = random_points(d, n, 4, rng());
        const auto vp = find_vanishing_poly(V, delta);
        ASSERT_TRUE(vp.has_value());
        EXPECT_LE(vp->degree, delta);
        for (const auto& p : V) EXPECT_TRUE(vp->f.eval(p).is_zero());
        // Minimality: nothing vanishes at a lower degree.
        if (vp->degree > 1) EXPECT_FALSE(find_vanishing_poly(V, vp->degree - 1).has_value());
    }
}

TEST(LemmaFindpoly, GridWithoutLinearPolynomial) {
    const LemmaResult res = lemma_findpoly(grid(2, 3), 3, LemmaMode::plain, Constants::defaults(2));
    const auto& c = res.certificate;
    EXPECT_EQ(c.monomials, 3u);
    EXPECT_EQ(c.rank_m, 3u);
    EXPECT_FALSE(c.deficient);
    EXPECT_FALSE(res.poly.has_value());
    EXPECT_FALSE(c.hypothesis_ok);
    EXPECT_FALSE(c.warnings.empty());
    EXPECT_TRUE(c.product_is_zero);
    EXPECT_TRUE(c.column_bound_holds && c.row_bound_holds && c.rank_sum_ok);
}

TEST(LemmaFindpoly, CollinearPointsGiveTheLine) {
    PointSet V(2);
    for (long t = 0; t < 10; ++t) V.add({t, 2 * t - 3});
    const LemmaResult res = lemma_findpoly(V, 5, LemmaMode::plain, Constants::defaults(2));
    ASSERT_TRUE(res.poly.has_value());
    EXPECT_EQ(res.poly->degree, 1u);
    EXPECT_TRUE(res.certificate.deficient);
    for (const auto& p : V) EXPECT_TRUE(res.poly->f.eval(p).is_zero());
    EXPECT_EQ(res.poly->f.monic(), poly(2, {{{1, 0}, 2}, {{0, 1}, -1}, {{0, 0}, -3}}).monic());
}

TEST(LemmaFindpoly, HypothesisFlagsAndErrors) {
    const Constants K = Constants::defaults(3);
    const LemmaResult res = lemma_findpoly(pasted_grids(3, 2, 2, 4), 4, LemmaMode::bounded, K);
    EXPECT_FALSE(res.certificate.hypothesis_ok);
    EXPECT_FALSE(res.certificate.warnings.empty());
    ASSERT_TRUE(res.poly.has_value());
    for (const auto& p : pasted_grids(3, 2, 2, 4)) EXPECT_TRUE(res.poly->f.eval(p).is_zero());
    // A permissive constant meets the hypothesis: every point lies on >= 3 lines.
    Constants tiny = K;
    tiny.K = mpq_class(1, 1000);
    EXPECT_TRUE(lemma_findpoly(grid(2, 6), 4, LemmaMode::plain, tiny).certificate.hypothesis_ok);
    EXPECT_THROW(lemma_findpoly(oracle::points(2, {{0, 0}, {1, 0}, {0, 1}}), 3, LemmaMode::plain, K),
                 std::invalid_argument);
}

TEST(VanishesOnLine, UsesDegreePlusOneSamples) {
    const Polynomial f = poly(2, {{{1, 1}, 1}});
    EXPECT_TRUE(vanishes_on_line(f, line_through({0, 0}, {1, 0})));
    EXPECT_TRUE(vanishes_on_line(f, line_through({0, 7}, {0, 1})));
    EXPECT_FALSE(vanishes_on_line(f, line_through({0, 1}, {1, 0})));
    EXPECT_FALSE(vanishes_on_line(f, line_through({0, 0}, {1, 1})));
}

TEST(Classify, PlaneAndAxisExamples) {
    const Polynomial f = poly(3, {{{1, 1, 1}, 1}});
    PointSet V(3);
    V.add({0, 0, 0});
    for (long t = 1; t <= 3; ++t) {
        V.add({t, 0, 0});
        V.add({0, t, 0});
        V.add({0, 0, t});
        V.add({t, t, 0});
    }
    // In-plane lines through the origin: flat with normal e3.
    const std::vector<Line> planar{axis_line({0, 0, 0}, {1, 0, 0}, V), axis_line({0, 0, 0}, {0, 1, 0}, V),
                                   axis_line({0, 0, 0}, {1, 1, 0}, V)};
    const Classification a = classify_flat_points(V, planar, f);
    EXPECT_EQ(a.points[0].kind, PointKind::flat);
    ASSERT_TRUE(a.points[0].witness.has_value());
    EXPECT_EQ(a.points[0].witness->normal, (Vec{0, 0, 1}));
    // Three axis lines through the origin: a joint with zero gradient.
    const std::vector<Line> axes{axis_line({0, 0, 0}, {1, 0, 0}, V), axis_line({0, 0, 0}, {0, 1, 0}, V),
                                 axis_line({0, 0, 0}, {0, 0, 1}, V)};
    const Classification b = classify_flat_points(V, axes, f);
    EXPECT_EQ(b.points[0].kind, PointKind::joint);
    EXPECT_EQ(b.points[0].direction_rank, 3u);
    EXPECT_TRUE(b.points[0].gradient_zero);
    EXPECT_EQ(b.points[0].gradient, (Vec{0, 0, 0}));
    EXPECT_TRUE(b.joints_have_zero_gradient);
}

TEST(Classify, CoordinatePlaneGrids) {
    const PointSet V = oracle::coordinate_planes(5);
    const Polynomial f = poly(3, {{{1, 1, 1}, 1}});
    const auto lines = rich_lines(V, 4);
    for (const auto& l : lines) EXPECT_TRUE(vanishes_on_line(f, l));
    const Classification c = classify_flat_points(V, lines, f);
    for (std::size_t i = 0; i < V.size(); ++i) {
        const Point& p = V[i];
        const std::size_t zeros = (p[0].is_zero() ? 1 : 0) + (p[1].is_zero() ? 1 : 0) + (p[2].is_zero() ? 1 : 0);
        if (zeros == 1) {
            EXPECT_EQ(c.points[i].kind, PointKind::flat) << "interior point " << i;
        } else {
            EXPECT_EQ(c.points[i].kind, PointKind::joint) << "axis point " << i;
            // Direct gradient of x1 x2 x3: (x2 x3, x1 x3, x1 x2).
            EXPECT_TRUE((p[1] * p[2]).is_zero() && (p[0] * p[2]).is_zero() && (p[0] * p[1]).is_zero());
            EXPECT_TRUE(c.points[i].gradient_zero);
        }
    }
    EXPECT_TRUE(c.joints_have_zero_gradient);
    EXPECT_EQ(c.joint_count, 13u);  // the three axes, origin counted once
}

TEST(Classify, RejectsNonVanishingPolynomial) {
    const PointSet G = grid(2, 3);
    const Polynomial f = poly(2, {{{1, 0}, 1}});
    EXPECT_THROW(classify_flat_points(G, rich_lines(G, 3), f), std::invalid_argument);
}

TEST(ProductHyperplane, Examples) {
    const PointSet V = oracle::points(1, {{1}, {2}, {3}});
    const Hyperplane H = Hyperplane::make({1, 1}, 4);
    const ProductProjection pp = hyperplane_from_product(H, V, 2);
    EXPECT_EQ(pp.product_hits, 3u);
    EXPECT_EQ(pp.delta, mpq_class(1, 3));
    EXPECT_EQ(pp.subset.size(), 1u);
    EXPECT_TRUE(pp.density_ok);
    EXPECT_TRUE(pp.correspondence_ok);
    // x1 = 4 - a2 for the chosen anchor.
    EXPECT_EQ(pp.hyperplane.offset, Scalar(4) - V[pp.anchor[0]][0]);

    const ProductProjection slice = hyperplane_from_product(Hyperplane::make({1, 0}, 2), V, 2);
    EXPECT_EQ(slice.hyperplane, Hyperplane::make({1}, 2));
    EXPECT_EQ(slice.subset, (std::vector<std::size_t>{1}));

    const PointSet W = grid(2, 3);
    const Hyperplane L = Hyperplane::make({1, -1}, 0);
    const ProductProjection same = hyperplane_from_product(L, W, 1);
    EXPECT_EQ(same.hyperplane, L);
    EXPECT_EQ(same.subset.size(), 3u);

    EXPECT_THROW(hyperplane_from_product(Hyperplane::make({1, 1}, 100), V, 2), std::invalid_argument);
    EXPECT_THROW(hyperplane_from_product(H, V, 3), std::invalid_argument);
}

TEST(ProductHyperplane, DensityOnRandomInstances) {
    std::mt19937_64 rng(55);
    std::uniform_int_distribution<long> c(-2, 2);
    for (int i = 0; i < 20; ++i) {
        const std::size_t d = 1 + static_cast<std::size_t>(i % 2);
        const PointSet V = random_points(d, 3 + rng() % 4, 4, rng());
        const std::size_t l = 2;
        Vec normal;
        while (normal.empty() || is_zero(normal)) {
            normal.clear();
            for (std::size_t k = 0; k < d * l; ++k) normal.push_back(c(rng));
        }
        Vec through = V[rng() % V.size()];
        const Vec& second = V[rng() % V.size()];
        through.insert(through.end(), second.begin(), second.end());
        const Hyperplane H = Hyperplane::make(normal, dot(through, normal));
        const ProductProjection pp = hyperplane_from_product(H, V, l);
        // Count |H cap V^2| directly.
        std::size_t hits = 0;
        for (const auto& a : V)
            for (const auto& b : V) {
                Vec ab = a;
                ab.insert(ab.end(), b.begin(), b.end());
                hits += H.contains(ab);
            }
        EXPECT_EQ(pp.product_hits, hits);
        EXPECT_GE(mpq_class(static_cast<unsigned long>(pp.subset.size())),
                  mpq_class(static_cast<unsigned long>(hits), static_cast<unsigned long>(V.size() * V.size())) *
                      static_cast<unsigned long>(V.size()));
        EXPECT_TRUE(pp.density_ok);
        EXPECT_TRUE(pp.correspondence_ok);
    }
}

TEST(Pipeline, PastedGridsYieldAFullPlane) {
    const PointSet V = pasted_grids(3, 2, 2, 4);
    const ExtractResult res = extract_hyperplane(V, 4, Constants::defaults(3));
    ASSERT_TRUE(res.found());
    EXPECT_EQ(res.subset.size(), 16u);
    EXPECT_EQ(res.hyperplane->members(V).size(), 16u);
    EXPECT_EQ(max_hyperplane_subset(V).count, 16u);
    const PipelineTrace& t = res.trace;
    EXPECT_TRUE(t.subset_bound_holds);
    EXPECT_GE(mpq_class(static_cast<unsigned long>(res.subset.size())), t.subset_bound);
    EXPECT_TRUE(t.first_refine_ok && t.second_refine_ok);
    EXPECT_TRUE(t.dyadic_witness);
    ASSERT_TRUE(t.f.has_value());
    ASSERT_EQ(t.final_subset.size(), t.final_points);
    for (auto i : t.final_subset) EXPECT_TRUE(t.f->eval(V[i]).is_zero());
    EXPECT_TRUE(t.joints_have_zero_gradient);
    EXPECT_FALSE(t.theorem_hypothesis);
}

TEST(Pipeline, PlanarGridGivesRichestLine) {
    const PointSet G = grid(2, 4);
    const ExtractResult res = extract_hyperplane(G, 4, Constants::defaults(2));
    ASSERT_TRUE(res.found());
    std::size_t richest = 0;
    for (const auto& l : rich_lines(G, 2)) richest = std::max(richest, l.incident.size());
    EXPECT_EQ(res.subset.size(), richest);
    EXPECT_EQ(res.subset.size(), 4u);
    // On the 5 x 5 grid the degree cap r0 - 2 = 2 admits no vanishing quadric.
    const ExtractResult five = extract_hyperplane(grid(2, 5), 4, Constants::defaults(2));
    EXPECT_EQ(five.status, ExtractStatus::no_polynomial);
    const PointSet final_set = grid(2, 5).subset(five.trace.final_subset);
    std::vector<Vec> rows;
    for (const auto& p : final_set) rows.push_back(MonomialBasis(2, 2).evaluate(p));
    EXPECT_EQ(oracle::rank(rows), 6u);
    EXPECT_TRUE(five.trace.r0_clamped);
}

TEST(Pipeline, GeneralPositionFindsNothing) {
    PointSet curve(2);
    for (long t = 1; t <= 6; ++t) curve.add({t, t * t * t});
    const ExtractResult res = extract_hyperplane(curve, 3, Constants::defaults(2));
    EXPECT_FALSE(res.found());
    EXPECT_EQ(res.status, ExtractStatus::no_rich_lines);
    EXPECT_THROW(extract_hyperplane(curve, 1, Constants::defaults(2)), std::invalid_argument);
}

TEST(Pipeline, ApHyperplaneOnPlanarGrid) {
    const PointSet G = grid(2, 4);
    const APHyperplaneResult res = ap_hyperplane(G, 4, 1, Constants::defaults(3));
    ASSERT_TRUE(res.found);
    EXPECT_TRUE(res.lifting_injective);
    EXPECT_EQ(res.progressions, count_aps(G, 4, false).count);
    EXPECT_TRUE(res.not_a_slice);
    ASSERT_TRUE(res.projection.has_value());
    EXPECT_GE(res.projection->subset.size(), 4u);
    EXPECT_LE(res.projection->subset.size(), max_hyperplane_subset(G).count);
    const PointSet lift = progression_lift(G, 4);
    for (auto i : res.slice_points) EXPECT_EQ(lift[i][0], Scalar(static_cast<long>(res.slice)));
}

TEST(Pipeline, ApHyperplaneWithoutProgressions) {
    const PointSet V = oracle::points(1, {{0}, {1}, {3}, {7}});
    const APHyperplaneResult res = ap_hyperplane(V, 4, 1, Constants::defaults(2));
    EXPECT_FALSE(res.found);
    EXPECT_EQ(res.progressions, 0u);
}
