#pragma once

#include "richlines/design_matrix.hpp"
#include "richlines/flats.hpp"
#include "richlines/line.hpp"
#include "richlines/point_set.hpp"
#include "richlines/polynomial.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace richlines {

/// Hypothesis constants. K_d = 32(2d)^d; C_d defaults to d^(3d), C'_d to C_d / 2^11.
struct Constants {
    mpq_class K;
    mpq_class C;
    mpq_class C_prime;

    static Constants defaults(std::size_t d);
};

struct VanishingPoly {
    std::size_t degree = 0;
    std::size_t kernel_dim = 0;  // dimension of the degree-`degree` kernel
    Polynomial f;
};

/// Minimal-degree nonzero polynomial of degree <= max_deg vanishing on V: the
/// first kernel basis vector of embed(V, delta) for the least delta with a
/// nonempty kernel. The result is checked against every point of V.
std::optional<VanishingPoly> find_vanishing_poly(const PointSet& V, std::size_t max_deg);

enum class LemmaMode { plain, bounded };

struct LemmaCertificate {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t r = 0;
    std::size_t line_count = 0;
    std::size_t min_lines_per_point = 0;  // k
    std::size_t max_lines_per_point = 0;
    mpq_class required_k;
    bool hypothesis_ok = false;
    std::vector<std::string> warnings;

    std::size_t tuples = 0;  // |R|
    DesignParameters params;
    std::size_t max_pair_multiplicity = 0;
    bool product_is_zero = false;
    std::size_t rank_a = 0;
    std::size_t rank_m = 0;
    std::size_t monomials = 0;  // m(d, r-2)
    mpq_class column_bound;
    mpq_class row_bound;
    bool bounds_vacuous = false;
    bool column_bound_holds = true;
    bool row_bound_holds = true;
    bool rank_sum_ok = true;
    bool deficient = false;  // rank(M) < m(d, r-2)
};

struct LemmaResult {
    LemmaCertificate certificate;
    std::optional<VanishingPoly> poly;  // minimal degree, at most r-2
};

/// Runs the design-matrix argument on V with its r-rich lines. r = 3 is accepted
/// with a warning (the guarantee needs r >= 4). Throws std::invalid_argument for
/// r < 2 or when V has no r-rich lines, std::logic_error if M is rank deficient
/// but no vanishing polynomial is found.
LemmaResult lemma_findpoly(const PointSet& V, std::size_t r, LemmaMode mode,
                           const Constants& constants);
LemmaResult lemma_findpoly(const PointSet& V, const std::vector<Line>& lines, std::size_t r, LemmaMode mode,
                           const Constants& constants);

/// f vanishes at the deg(f)+1 points at parameters t = 0..deg(f), hence on the line.
bool vanishes_on_line(const Polynomial& f, const Line& line);

enum class PointKind { flat, joint };

struct PointClass {
    std::size_t point = 0;
    PointKind kind = PointKind::flat;
    std::vector<std::size_t> lines;  // indices into the input line list
    std::size_t direction_rank = 0;
    std::optional<Hyperplane> witness;  // flat points: a hyperplane through the point containing its lines
    std::vector<Scalar> gradient;
    bool gradient_zero = false;
};

struct Classification {
    std::vector<PointClass> points;  // one per point of V
    bool joints_have_zero_gradient = true;
    std::size_t flat_count = 0;
    std::size_t joint_count = 0;
};

/// Flat iff the directions of the lines through a point span at most d-1
/// dimensions. Throws std::invalid_argument if f does not vanish on some line.
Classification classify_flat_points(const PointSet& V, const std::vector<Line>& lines, const Polynomial& f);

/// Among hyperplanes through `v` containing every direction in `dirs`, one with
/// the most points of V (extra spanning points tried in index order; ties keep
/// the first). Returns nullopt when the directions span all of C^d.
std::optional<Hyperplane> best_hyperplane_through(const PointSet& V, const Point& v, const std::vector<Vec>& dirs);

struct ProductProjection {
    Hyperplane hyperplane;             // H' in C^d
    std::vector<std::size_t> subset;   // V cap H'
    std::size_t block = 0;             // index of the leading nonzero block of h
    std::vector<std::size_t> anchor;   // indices of the fixed factors a (l - 1 of them)
    std::size_t product_hits = 0;      // |H cap V^l|
    mpq_class delta;                   // product_hits / n^l
    bool correspondence_ok = false;
    bool density_ok = false;           // |H' cap V| >= delta * n
};

/// Pulls a hyperplane of C^(dl) meeting V^l back to a hyperplane of C^d by
/// fixing the other factors at their best value. Throws std::invalid_argument
/// when h = 0, the dimension is not d*l, or H misses V^l.
ProductProjection hyperplane_from_product(const Hyperplane& H, const PointSet& V, std::size_t l);

}  // namespace richlines
