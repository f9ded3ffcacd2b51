#pragma once

#include "richlines/exact_matrix.hpp"
#include "richlines/point_set.hpp"
#include "richlines/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace richlines {

/// C(d + r, d), the number of monomials of degree at most r in d variables.
std::size_t monomial_count(std::size_t d, std::size_t r);

/// m(d,r) >= (r/d)^d, checked exactly.
bool monomial_lower_bound_holds(std::size_t d, std::size_t r);

/// All exponent vectors of total degree <= r in graded-lex order; the constant
/// monomial comes first.
class MonomialBasis {
public:
    MonomialBasis(std::size_t dim, std::size_t degree);

    std::size_t dim() const { return dim_; }
    std::size_t degree() const { return degree_; }
    std::size_t size() const { return exps_.size(); }
    const Exponent& operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<Exponent>& exponents() const { return exps_; }

    /// Evaluations of every basis monomial at `point`.
    Vec evaluate(const Point& point) const;

    /// Coefficient vector of f in this basis; throws if deg f exceeds the bound.
    Vec coefficients(const Polynomial& f) const;
    Polynomial polynomial(const Vec& coeffs) const;

private:
    std::size_t dim_;
    std::size_t degree_;
    std::vector<Exponent> exps_;
};

/// n x m(d,r) matrix whose i-th row is the Veronese image of V[i].
/// OpenMP over rows.
ExactMatrix embed(const PointSet& V, std::size_t r);

/// Zeros of f on S^d, or on {1} x S^{d-1} when `homogeneous_slice` is set.
/// Throws std::invalid_argument for the zero polynomial, and in slice mode for
/// a non-homogeneous f or d < 2. OpenMP over the grid.
std::size_t sz_zero_count(const Polynomial& f, const Vec& S, bool homogeneous_slice);

/// deg(f)*|S|^(d-1), or deg(f)*|S|^(d-2) in slice mode.
std::size_t sz_bound(const Polynomial& f, std::size_t set_size, bool homogeneous_slice);

namespace reference {
ExactMatrix embed(const PointSet& V, std::size_t r);
std::size_t sz_zero_count(const Polynomial& f, const Vec& S, bool homogeneous_slice);
}  // namespace reference

}  // namespace richlines
