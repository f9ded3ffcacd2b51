#include "oracles.hpp"

#include "richlines/configurations.hpp"
#include "richlines/exact_matrix.hpp"
#include "richlines/polynomial.hpp"
#include "richlines/veronese.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace richlines;

namespace {

Polynomial poly(std::size_t d, std::initializer_list<std::pair<Exponent, long>> terms) {
    Polynomial f(d);
    for (const auto& [e, c] : terms) f.add_term(e, c);
    return f;
}

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t d, std::size_t deg, bool homogeneous) {
    Polynomial f(d);
    std::uniform_int_distribution<long> coef(-3, 3);
    const MonomialBasis B(d, deg);
    while (f.is_zero())
        for (const auto& e : B.exponents()) {
            if (homogeneous && total_degree(e) != deg) continue;
            f.add_term(e, coef(rng));
        }
    return f;
}

Scalar abs_real(const Scalar& s) { return Scalar(mpq_class(abs(s.re()))); }

}  // namespace

TEST(Monomials, Counts) {
    EXPECT_EQ(monomial_count(2, 2), 6u);
    for (std::size_t d = 1; d <= 5; ++d) EXPECT_EQ(monomial_count(d, 0), 1u);
    for (std::size_t r = 0; r <= 8; ++r) EXPECT_EQ(monomial_count(1, r), r + 1);
    for (std::size_t d = 1; d <= 4; ++d)
        for (std::size_t r = 0; r <= 6; ++r) {
            EXPECT_EQ(MonomialBasis(d, r).size(), monomial_count(d, r));
            EXPECT_TRUE(monomial_lower_bound_holds(d, r));
        }
}

TEST(Monomials, GradedLexBasisOrder) {
    const MonomialBasis B(2, 2);
    const std::vector<Exponent> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    EXPECT_EQ(B.exponents(), expected);
}

TEST(Embed, Examples) {
    const PointSet V = oracle::points(2, {{3, 5}});
    const ExactMatrix M = embed(V, 2);
    EXPECT_EQ(M.row(0), (Vec{1, 3, 5, 9, 15, 25}));
    const ExactMatrix C = embed(grid(3, 2), 0);
    EXPECT_EQ(C.cols(), 1u);
    for (std::size_t i = 0; i < C.rows(); ++i) EXPECT_EQ(C(i, 0), Scalar(1));
    PointSet line(2);
    for (long t = 0; t < 4; ++t) line.add({2 * t + 1, 1 - t});
    EXPECT_EQ(rank(embed(line, 2)), 3u);
}

TEST(Embed, RowsAreDirectMonomialEvaluations) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 20; ++i) {
        const std::size_t d = 1 + rng() % 3;
        const std::size_t r = rng() % 4;
        PointSet V(d);
        while (V.size() < 6) {
            Point p;
            for (std::size_t k = 0; k < d; ++k) p.push_back(oracle::random_scalar(rng, i % 2 == 0));
            if (!V.contains(p)) V.add(p);
        }
        const ExactMatrix M = embed(V, r);
        EXPECT_EQ(M, reference::embed(V, r));
        const MonomialBasis B(d, r);
        for (std::size_t row = 0; row < V.size(); ++row)
            for (std::size_t col = 0; col < B.size(); ++col) EXPECT_EQ(M(row, col), oracle::monomial(V[row], B[col]));
    }
}

TEST(Embed, CollinearPointsAreMinimallyDependent) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coord(-4, 4);
    for (int i = 0; i < 30; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 2);
        const std::size_t r = 2 + static_cast<std::size_t>(i % 5);
        Vec base;
        Vec dir;
        for (std::size_t k = 0; k < d; ++k) {
            base.push_back(coord(rng));
            dir.push_back(coord(rng));
        }
        if (is_zero(dir)) dir[0] = 1;
        PointSet V(d);
        for (long t = 0; V.size() < r + 2; ++t) V.add(base + Scalar(3 * t - 5) * dir);
        const ExactMatrix M = embed(V, r);
        EXPECT_EQ(rank(M), r + 1);
        std::vector<Vec> rows;
        for (std::size_t k = 0; k < M.rows(); ++k) rows.push_back(M.row(k));
        EXPECT_EQ(oracle::rank(rows), r + 1);
        for (std::size_t skip = 0; skip < r + 2; ++skip) {
            std::vector<Vec> sub;
            for (std::size_t k = 0; k < rows.size(); ++k)
                if (k != skip) sub.push_back(rows[k]);
            EXPECT_EQ(oracle::rank(sub), r + 1);
        }
    }
}

TEST(Embed, KernelVectorsAreVanishingPolynomials) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 20; ++i) {
        const std::size_t d = 2;
        const std::size_t r = 1 + rng() % 3;
        const PointSet V = random_points(d, 2 + rng() % 8, 3, rng());
        const ExactMatrix M = embed(V, r);
        const auto kernel = nullspace(M);
        const MonomialBasis B(d, r);
        EXPECT_EQ(kernel.empty(), rank(M) == B.size());
        for (const auto& w : kernel) {
            const Polynomial f = B.polynomial(w);
            EXPECT_FALSE(f.is_zero());
            for (const auto& p : V) EXPECT_TRUE(f.eval(p).is_zero());
            EXPECT_EQ(B.coefficients(f), w);
        }
    }
}

TEST(Polynomial, EvalExamples) {
    EXPECT_EQ(Polynomial(2).eval({7, 8}), Scalar(0));
    const Polynomial circle = poly(2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -25}});
    EXPECT_EQ(circle.eval({3, 4}), Scalar(0));
    const Polynomial xy = poly(2, {{{1, 1}, 1}});
    EXPECT_EQ(xy.eval({2, Scalar(mpq_class(3, 2))}), Scalar(3));
    EXPECT_EQ(to_string(circle), "x1^2 + x2^2 - 25");
    EXPECT_EQ(circle.degree(), 2);
    EXPECT_EQ(Polynomial(2).degree(), -1);
}

TEST(Polynomial, EvalMatchesInnerProductWithEmbedding) {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 50; ++i) {
        const std::size_t d = 1 + rng() % 3;
        const Polynomial f = random_polynomial(rng, d, 3, false);
        const MonomialBasis B(d, 3);
        Point a;
        for (std::size_t k = 0; k < d; ++k) a.push_back(oracle::random_scalar(rng, i % 2 == 1));
        Scalar direct(0);
        for (const auto& [e, c] : f.terms()) direct += c * oracle::monomial(a, e);
        EXPECT_EQ(f.eval(a), direct);
        EXPECT_EQ(f.eval(a), dot(B.coefficients(f), B.evaluate(a)));
    }
}

TEST(Polynomial, GradientExamples) {
    const Polynomial circle = poly(2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -25}});
    const auto g = circle.gradient();
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g[0], poly(2, {{{1, 0}, 2}}));
    EXPECT_EQ(g[1], poly(2, {{{0, 1}, 2}}));
    for (const auto& p : Polynomial::constant(3, 5).gradient()) EXPECT_TRUE(p.is_zero());
}

TEST(Polynomial, GradientFiniteDifferences) {
    // f = x1^3 + x1 x2^2 at a = (1, 2): f(1 + t, 2) = 5 + 7t + 3t^2 + t^3, so the
    // forward-difference error along e1 is 3 eps + eps^2 <= 4 eps for eps <= 1.
    const Polynomial f = poly(2, {{{3, 0}, 1}, {{1, 2}, 1}});
    const Point a{1, 2};
    const auto grad = f.gradient();
    const Scalar C(4);
    Scalar previous(1000);
    for (long denom : {10, 100, 1000}) {
        const Scalar eps(mpq_class(1, denom));
        const Scalar fd = (f.eval({a[0] + eps, a[1]}) - f.eval(a)) / eps;
        const Scalar err = abs_real(fd - grad[0].eval(a));
        EXPECT_LE(err, C * eps);
        EXPECT_LT(err, previous);
        previous = err;
    }
    // Along e2: f(1, 2 + t) = 5 + 4t + t^2, error exactly eps.
    for (long denom : {10, 100, 1000}) {
        const Scalar eps(mpq_class(1, denom));
        const Scalar fd = (f.eval({a[0], a[1] + eps}) - f.eval(a)) / eps;
        EXPECT_EQ(fd - grad[1].eval(a), eps);
    }
}

TEST(Polynomial, GradientDegreesDrop) {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 30; ++i) {
        const Polynomial f = random_polynomial(rng, 3, 4, false);
        for (const auto& g : f.gradient()) EXPECT_LE(g.degree(), f.degree() - 1);
    }
}

TEST(Polynomial, HomogeneousPartExamples) {
    const Polynomial circle = poly(2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -25}});
    EXPECT_EQ(circle.homogeneous_part(), poly(2, {{{2, 0}, 1}, {{0, 2}, 1}}));
    const Polynomial h = poly(3, {{{1, 1, 0}, 2}, {{0, 0, 2}, -1}});
    EXPECT_EQ(h.homogeneous_part(), h);
    const Polynomial f = poly(2, {{{1, 1}, 1}, {{1, 0}, 1}, {{0, 0}, 7}});
    EXPECT_EQ(f.restrict_to_line({0, 0}, {1, 1}), (Vec{7, 1, 1}));
    EXPECT_THROW(Polynomial(2).homogeneous_part(), std::invalid_argument);
}

TEST(Polynomial, LeadingCoefficientAlongLines) {
    std::mt19937_64 rng(16);
    for (int i = 0; i < 100; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 2);
        const Polynomial f = random_polynomial(rng, d, 1 + rng() % 3, false);
        Vec a;
        Vec b;
        for (std::size_t k = 0; k < d; ++k) {
            a.push_back(oracle::random_scalar(rng, false));
            b.push_back(oracle::random_scalar(rng, i % 4 == 0));
        }
        const Vec g = f.restrict_to_line(a, b);
        // g agrees with f on the line at several parameters.
        for (long t = -2; t <= 2; ++t) {
            Scalar gt(0);
            Scalar power(1);
            for (const auto& c : g) {
                gt += c * power;
                power *= Scalar(t);
            }
            EXPECT_EQ(gt, f.eval(a + Scalar(t) * b));
        }
        const Scalar lead = f.homogeneous_part().eval(b);
        if (!lead.is_zero()) {
            ASSERT_EQ(static_cast<long>(g.size()) - 1, f.degree());
            EXPECT_EQ(g.back(), lead);
        }
    }
}

TEST(ZeroCount, Examples) {
    const Polynomial diag = poly(2, {{{1, 0}, 1}, {{0, 1}, -1}});
    EXPECT_EQ(sz_zero_count(diag, {1, 2, 3}, false), 3u);
    EXPECT_EQ(sz_bound(diag, 3, false), 3u);
    const Polynomial no_roots = poly(2, {{{2, 0}, 1}, {{0, 0}, 1}});
    EXPECT_EQ(sz_zero_count(no_roots, {-2, -1, 0, 1, 2}, false), 0u);
    EXPECT_EQ(sz_zero_count(diag, {1, 2, 3, 4, 5}, true), 1u);
    EXPECT_EQ(sz_bound(diag, 5, true), 1u);
    EXPECT_THROW(sz_zero_count(Polynomial(2), {1, 2}, false), std::invalid_argument);
    EXPECT_THROW(sz_zero_count(poly(2, {{{1, 0}, 1}, {{0, 0}, 1}}), {1, 2}, true), std::invalid_argument);
}

TEST(ZeroCount, NeverExceedsBoundAndMatchesBruteForce) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> val(-6, 6);
    for (int i = 0; i < 100; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 2);
        std::set<long> s;
        const std::size_t size = 1 + rng() % 8;
        while (s.size() < size) s.insert(val(rng));
        const Vec S(s.begin(), s.end());
        const Polynomial f = random_polynomial(rng, d, 1 + rng() % 4, false);
        const Polynomial h = random_polynomial(rng, d, 1 + rng() % 4, true);
        // Brute force over S^d.
        std::size_t zeros = 0;
        std::vector<std::size_t> idx(d, 0);
        for (;;) {
            Point p;
            for (auto k : idx) p.push_back(S[k]);
            zeros += f.eval(p).is_zero();
            std::size_t k = d;
            while (k > 0 && ++idx[k - 1] == S.size()) idx[--k] = 0;
            if (k == 0) break;
        }
        EXPECT_EQ(sz_zero_count(f, S, false), zeros);
        EXPECT_EQ(sz_zero_count(f, S, false), reference::sz_zero_count(f, S, false));
        EXPECT_EQ(sz_zero_count(h, S, true), reference::sz_zero_count(h, S, true));
        EXPECT_LE(zeros, sz_bound(f, S.size(), false));
        EXPECT_LE(sz_zero_count(h, S, true), sz_bound(h, S.size(), true));
    }
}
