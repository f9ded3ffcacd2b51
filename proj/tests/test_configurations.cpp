#include "oracles.hpp"

#include "richlines/configurations.hpp"
#include "richlines/incidence.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace richlines;

namespace {

std::set<Point> as_set(const PointSet& V) { return {V.begin(), V.end()}; }

}  // namespace

TEST(Grid, Examples) {
    EXPECT_EQ(grid(1, 3), oracle::points(1, {{1}, {2}, {3}}));
    EXPECT_EQ(grid(2, 2), oracle::points(2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
    EXPECT_EQ(grid(3, 4).size(), 64u);
    EXPECT_EQ(grid(4, 1).size(), 1u);
    EXPECT_EQ(grid(4, 1)[0], (Point{1, 1, 1, 1}));
}

TEST(Grid, SizeCap) {
    EXPECT_THROW(grid(2, 11, 100), SizeCapExceeded);
    EXPECT_NO_THROW(grid(2, 10, 100));
    EXPECT_THROW(grid(0, 3), std::invalid_argument);
}

TEST(PastedGrids, Examples) {
    const PointSet one = pasted_grids(3, 2, 1, 3);
    ASSERT_EQ(one.size(), 9u);
    for (const auto& p : one) EXPECT_EQ(p[2], Scalar(1));

    const PointSet two = pasted_grids(3, 2, 2, 2);
    ASSERT_EQ(two.size(), 8u);
    std::size_t on1 = 0;
    std::size_t on2 = 0;
    for (const auto& p : two) {
        on1 += p[2] == Scalar(1);
        on2 += p[2] == Scalar(2);
    }
    EXPECT_EQ(on1, 4u);
    EXPECT_EQ(on2, 4u);
}

TEST(PastedGrids, RichLinesStayInsideCopies) {
    const auto lines = rich_lines(pasted_grids(3, 2, 2, 3), 3);
    EXPECT_EQ(lines.size(), 16u);
    EXPECT_EQ(lines.size(), 2 * oracle::rich_line_sets(grid(2, 3), 3).size());
    EXPECT_EQ(oracle::rich_line_sets(pasted_grids(3, 2, 2, 3), 3).size(), 16u);
    // Larger instance: every 3-rich line is confined to one copy.
    const PointSet P = pasted_grids(4, 2, 3, 3);
    for (const auto& line : rich_lines(P, 3)) {
        std::set<std::vector<Scalar>> tails;
        for (auto i : line.incident) tails.insert({P[i][2], P[i][3]});
        EXPECT_EQ(tails.size(), 1u);
    }
}

TEST(PastedGrids, DimensionConstraint) {
    EXPECT_THROW(pasted_grids(3, 3, 2, 2), std::invalid_argument);
    EXPECT_THROW(pasted_grids(3, 1, 2, 2), std::invalid_argument);
    EXPECT_THROW(pasted_grids(3, 2, 0, 2), std::invalid_argument);
}

TEST(Power, Examples) {
    const PointSet V = oracle::points(1, {{1}, {2}});
    EXPECT_EQ(power(V, 2), oracle::points(2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
    EXPECT_EQ(power(V, 1), V);
    EXPECT_EQ(as_set(power(grid(1, 2), 3)), as_set(grid(3, 2)));
    const PointSet W = oracle::points(2, {{0, 1}, {3, 5}, {2, 2}});
    EXPECT_EQ(power(W, 3).size(), 27u);
    EXPECT_EQ(power(W, 2)[5], (Point{3, 5, 2, 2}));
    EXPECT_THROW(power(grid(1, 10), 3, 999), SizeCapExceeded);
}

TEST(SumProduct, SmallFamily) {
    const auto cfg = sumproduct_config({1, 2}, {0, 1}, 2);
    EXPECT_EQ(as_set(cfg.points), as_set(oracle::points(2, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}})));
    ASSERT_EQ(cfg.lines.size(), 4u);
    for (const auto& line : cfg.lines) EXPECT_EQ(line.incident.size(), 2u);
}

TEST(SumProduct, OnlyZeroDilation) {
    const auto cfg = sumproduct_config({1, 2, 5}, {0}, 3);
    // V_0 = {0} x A^2.
    std::set<Point> expected;
    for (long a : {1, 2, 5})
        for (long b : {1, 2, 5}) expected.insert({0, a, b});
    EXPECT_EQ(as_set(cfg.points), expected);
    EXPECT_EQ(cfg.v0.size(), 9u);
}

TEST(SumProduct, LinesAreQRichAndMeetV0Once) {
    const Vec A{1, 2, 4};
    const Vec Q{0, 1, 3};
    for (std::size_t d : {2u, 3u}) {
        const auto cfg = sumproduct_config(A, Q, d);
        std::size_t expected_lines = 1;
        for (std::size_t i = 0; i < 2 * d - 2; ++i) expected_lines *= A.size();
        EXPECT_EQ(cfg.lines.size(), expected_lines);
        const std::set<std::size_t> v0(cfg.v0.begin(), cfg.v0.end());
        for (const auto& line : cfg.lines) {
            // Recount the incidences directly.
            std::size_t on = 0;
            std::size_t hits = 0;
            for (std::size_t i = 0; i < cfg.points.size(); ++i)
                if (line.contains(cfg.points[i])) {
                    ++on;
                    hits += v0.count(i);
                }
            EXPECT_EQ(on, line.incident.size());
            EXPECT_GE(on, Q.size());
            EXPECT_EQ(hits, 1u);
        }
    }
}

TEST(SumProduct, Preconditions) {
    EXPECT_THROW(sumproduct_config({1, 2}, {1, 2}, 2), std::invalid_argument);
    EXPECT_THROW(sumproduct_config({1, 2}, {0, 1}, 1), std::invalid_argument);
    EXPECT_THROW(sumproduct_config({1, 1}, {0, 1}, 2), std::invalid_argument);
}

TEST(SumDilate, Example) { EXPECT_EQ(sum_dilate({1, 2}, 2), (Vec{3, 4, 5, 6})); }

TEST(Generators, RandomPointsAreDistinctAndSeeded) {
    const PointSet a = random_points(3, 40, 2, 7);
    const PointSet b = random_points(3, 40, 2, 7);
    EXPECT_EQ(a, b);
    EXPECT_EQ(as_set(a).size(), 40u);
    for (const auto& p : a)
        for (const auto& x : p) EXPECT_TRUE(x >= Scalar(-2) && x <= Scalar(2));
    EXPECT_THROW(random_points(2, 30, 2, 1), std::invalid_argument);
}

TEST(Generators, DeclarativeSpec) {
    GeneratorSpec s;
    s.kind = "pasted";
    s.d = 3;
    s.l = 2;
    s.copies = 2;
    s.h = 2;
    EXPECT_EQ(generate(s), pasted_grids(3, 2, 2, 2));
    s.kind = "nonsense";
    EXPECT_THROW(generate(s), std::invalid_argument);
}

TEST(PointSetTest, RejectsDuplicatesAndWrongDimension) {
    PointSet V(2);
    V.add({1, 2});
    EXPECT_THROW(V.add({1, 2}), std::invalid_argument);
    EXPECT_THROW(V.add({1, 2, 3}), std::invalid_argument);
    EXPECT_EQ(V.index_of({1, 2}), 0u);
    EXPECT_FALSE(V.index_of({2, 1}).has_value());
}
