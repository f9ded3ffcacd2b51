#include "oracles.hpp"

#include "richlines/configurations.hpp"
#include "richlines/design_matrix.hpp"
#include "richlines/exact_matrix.hpp"
#include "richlines/incidence.hpp"
#include "richlines/veronese.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace richlines;

namespace {

std::vector<std::size_t> iota(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_counts(const std::vector<Tuple>& tuples) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
    for (const auto& t : tuples)
        for (std::size_t a = 0; a < t.size(); ++a)
            for (std::size_t b = a + 1; b < t.size(); ++b) ++out[{std::min(t[a], t[b]), std::max(t[a], t[b])}];
    return out;
}

// Rank of A by the test oracle, from its sparse rows.
std::size_t oracle_rank(const DesignMatrix& A) {
    std::vector<Vec> rows;
    for (const auto& r : A.rows) {
        Vec dense(A.cols, Scalar(0));
        for (const auto& [c, v] : r) dense[c] = v;
        rows.push_back(dense);
    }
    return oracle::rank(rows);
}

DesignMatrix from_dense(const std::vector<std::vector<long>>& m) {
    DesignMatrix A;
    A.cols = m[0].size();
    for (const auto& row : m) {
        SparseRow s;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) s.emplace_back(j, Scalar(row[j]));
        A.rows.push_back(s);
    }
    A.params = measure_design(A.rows, A.cols);
    return A;
}

}  // namespace

TEST(TupleCover, Examples) {
    EXPECT_EQ(tuple_cover(iota(6), 3), (std::vector<Tuple>{{0, 1, 2}, {3, 4, 5}}));
    const auto four = tuple_cover({10, 11, 12, 13}, 3);
    EXPECT_EQ(four, (std::vector<Tuple>{{10, 11, 12}, {11, 12, 13}}));
    const auto pc = pair_counts(four);
    EXPECT_EQ(pc.at({11, 12}), 2u);
    for (const auto& [pair, c] : pc)
        if (pair != std::pair<std::size_t, std::size_t>{11, 12}) EXPECT_LE(c, 1u);
    EXPECT_EQ(tuple_cover(iota(3), 3).size(), 1u);
    EXPECT_THROW(tuple_cover(iota(2), 3), std::invalid_argument);
}

TEST(TupleCover, CoversEveryPointWithPairMultiplicityAtMostTwo) {
    for (std::size_t r = 2; r <= 7; ++r)
        for (std::size_t n = r; n <= 4 * r; ++n) {
            const auto tuples = tuple_cover(iota(n), r);
            std::vector<std::size_t> hit(n, 0);
            for (const auto& t : tuples) {
                EXPECT_EQ(t.size(), r);
                for (auto i : t) ++hit[i];
            }
            for (auto h : hit) EXPECT_GE(h, 1u);
            for (const auto& [pair, c] : pair_counts(tuples)) EXPECT_LE(c, 2u);
            EXPECT_EQ(tuples.size(), (n + r - 1) / r);
        }
}

TEST(DependencyCoeffs, FiniteDifferences) {
    const PointSet line4 = oracle::points(2, {{0, 0}, {1, 0}, {2, 0}, {3, 0}});
    EXPECT_EQ(dependency_coeffs(line4, {0, 1, 2, 3}, 2), (Vec{1, -3, 3, -1}));
    const PointSet line3 = oracle::points(3, {{1, 1, 1}, {2, 3, 4}, {3, 5, 7}});
    EXPECT_EQ(dependency_coeffs(line3, {0, 1, 2}, 1), (Vec{1, -2, 1}));
    for (std::size_t r = 3; r <= 6; ++r) {
        PointSet V(2);
        for (long t = 0; t < static_cast<long>(r); ++t) V.add({5 - 2 * t, 3 * t});
        const Vec a = dependency_coeffs(V, iota(r), r - 2);
        for (std::size_t j = 0; j < r; ++j) {
            const mpz_class b = oracle::binomial(r - 1, j);
            EXPECT_EQ(a[j], Scalar(mpq_class(j % 2 == 0 ? b : mpz_class(-b))));
        }
    }
}

TEST(DependencyCoeffs, AnnihilatesEmbeddingOnRandomLines) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int i = 0; i < 30; ++i) {
        const std::size_t r = 3 + static_cast<std::size_t>(i % 4);
        Vec base{c(rng), c(rng), c(rng)};
        Vec dir{c(rng), c(rng), 1};
        std::set<long> ts;
        while (ts.size() < r) ts.insert(c(rng) * 3 + c(rng));
        PointSet V(3);
        for (long t : ts) V.add(base + Scalar(t) * dir);
        const Vec a = dependency_coeffs(V, iota(r), r - 2);
        const ExactMatrix M = embed(V, r - 2);
        EXPECT_TRUE(is_zero(M.transpose() * a));
        for (const auto& x : a) EXPECT_FALSE(x.is_zero());
        EXPECT_TRUE(a[0].is_one());
    }
}

TEST(DependencyCoeffs, RejectsNonCollinearPoints) {
    const PointSet V = oracle::points(2, {{0, 0}, {1, 0}, {0, 1}});
    EXPECT_THROW(dependency_coeffs(V, {0, 1, 2}, 1), std::invalid_argument);
}

TEST(Assemble, GridThreeByThree) {
    const PointSet G = grid(2, 3);
    const auto lines = rich_lines(G, 3);
    const Assembly as = assemble(G, lines, 3);
    EXPECT_EQ(as.A.row_count(), 8u);
    EXPECT_EQ(as.A.cols, 9u);
    EXPECT_EQ(as.M.rows(), 9u);
    EXPECT_EQ(as.M.cols(), 3u);
    EXPECT_TRUE(as.product_is_zero);
    EXPECT_TRUE((as.A.dense() * as.M).is_zero());
    EXPECT_EQ(as.A.params.q, 3u);
    EXPECT_LE(as.A.params.t, 2u);
    EXPECT_EQ(as.A.params.k, 2u);  // edge midpoints lie on a row and a column only
    EXPECT_TRUE(as.every_point_covered);
    EXPECT_LE(as.max_pair_multiplicity, 2u);
    const RankBoundReport rb = rank_bound_check(as.A, rank(as.M));
    EXPECT_TRUE(rb.ok());
    EXPECT_EQ(rb.rank_a, oracle_rank(as.A));
    EXPECT_EQ(rb.column_bound, mpq_class(9) - mpq_class(static_cast<unsigned long>(81 * rb.params.t)) / static_cast<unsigned long>(rb.params.k));
}

TEST(Assemble, EdgeCases) {
    PointSet line(2);
    for (long t = 0; t < 4; ++t) line.add({t, t});
    const Assembly one = assemble(line, rich_lines(line, 4), 4);
    EXPECT_EQ(one.A.row_count(), 1u);
    EXPECT_TRUE(one.product_is_zero);
    const PointSet tri = oracle::points(2, {{0, 0}, {1, 0}, {0, 1}});
    const Assembly none = assemble(tri, rich_lines(tri, 3), 3);
    EXPECT_EQ(none.A.row_count(), 0u);
    EXPECT_TRUE(none.product_is_zero);
}

TEST(Assemble, ClaimPropertiesOverConfigurations) {
    const std::vector<std::pair<PointSet, std::size_t>> cases{
        {grid(2, 4), 3}, {grid(3, 3), 3}, {grid(2, 5), 4}, {pasted_grids(3, 2, 2, 4), 4}, {grid(2, 6), 5}};
    for (const auto& [V, r] : cases) {
        const auto lines = rich_lines(V, r);
        const Assembly as = assemble(V, lines, r);
        EXPECT_TRUE(as.product_is_zero);
        EXPECT_TRUE((as.A.dense() * as.M).is_zero());
        EXPECT_LE(as.A.params.q, r);
        EXPECT_LE(as.A.params.t, 2u);
        // Pair multiplicity and coverage recomputed from the tuples.
        std::size_t worst = 0;
        for (const auto& [pair, c] : pair_counts(as.A.cover.tuples)) worst = std::max(worst, c);
        EXPECT_EQ(worst, as.max_pair_multiplicity);
        EXPECT_LE(worst, 2u);
        const auto deg = line_degrees(V.size(), lines);
        std::vector<std::size_t> in_tuples(V.size(), 0);
        for (const auto& t : as.A.cover.tuples)
            for (auto i : t) ++in_tuples[i];
        for (std::size_t i = 0; i < V.size(); ++i) EXPECT_GE(in_tuples[i], deg[i]);
        // |R| <= 16 n k / r when every point lies on between k and 8k lines.
        const std::size_t k = *std::min_element(deg.begin(), deg.end());
        const std::size_t kmax = *std::max_element(deg.begin(), deg.end());
        if (k > 0 && kmax <= 8 * k) EXPECT_LE(r * as.A.cover.tuples.size(), 16 * V.size() * k);
        EXPECT_TRUE(rank_bound_check(as.A, rank(as.M)).ok());
    }
}

TEST(VerifyDesign, Examples) {
    const DesignMatrix I = from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    EXPECT_EQ(I.params, (DesignParameters{1, 1, 0}));
    const DesignMatrix J = from_dense({{1, 1}, {1, 1}});
    EXPECT_EQ(J.params, (DesignParameters{2, 2, 2}));
    EXPECT_TRUE(verify_design(J, DesignParameters{2, 2, 2}).ok);
    EXPECT_FALSE(verify_design(J, DesignParameters{2, 3, 2}).ok);
    EXPECT_FALSE(verify_design(J, DesignParameters{1, 2, 2}).ok);
    EXPECT_FALSE(verify_design(J, DesignParameters{2, 2, 1}).ok);
}

TEST(RankBound, IdentityAndVacuous) {
    const DesignMatrix I = from_dense({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    const RankBoundReport rb = rank_bound_check(I);
    EXPECT_EQ(rb.rank_a, 4u);
    EXPECT_EQ(rb.column_bound, mpq_class(4));
    EXPECT_TRUE(rb.ok());
    const DesignMatrix Z = from_dense({{1, 0}, {2, 0}});
    const RankBoundReport rz = rank_bound_check(Z);
    EXPECT_TRUE(rz.vacuous);
    EXPECT_TRUE(rz.ok());
}

TEST(RankBound, StructuredRandomDesigns) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 6 + rng() % 9;
        const std::size_t q = 2 + rng() % 3;
        const DesignMatrix A = structured_random_design(n, q, 1 + rng() % 3, rng());
        const DesignParameters p = measure_design(A.rows, A.cols);
        EXPECT_EQ(p, A.params);
        EXPECT_LE(p.q, q);
        EXPECT_LE(p.t, 2u);
        const RankBoundReport rb = rank_bound_check(A);
        EXPECT_EQ(rb.rank_a, oracle_rank(A));
        if (p.k > 0) {
            const mpq_class t(static_cast<unsigned long>(p.t));
            const mpq_class qq(static_cast<unsigned long>(p.q * p.q));
            const mpq_class nn(static_cast<unsigned long>(n));
            const mpq_class mm(static_cast<unsigned long>(A.row_count()));
            const mpq_class kk(static_cast<unsigned long>(p.k));
            EXPECT_GE(mpq_class(static_cast<unsigned long>(rb.rank_a)), nn - nn * t * qq / kk);
            EXPECT_GE(mpq_class(static_cast<unsigned long>(rb.rank_a)), nn - mm * t * qq / (kk * kk));
        }
        EXPECT_TRUE(rb.ok());
    }
}
