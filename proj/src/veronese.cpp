#include "richlines/veronese.hpp"

#include <algorithm>
#include <stdexcept>

namespace richlines {

std::size_t monomial_count(std::size_t d, std::size_t r) {
    // C(d+r, d) computed incrementally; each partial product is itself a binomial.
    mpz_class c = 1;
    for (std::size_t k = 1; k <= d; ++k) {
        c *= static_cast<unsigned long>(r + k);
        c /= static_cast<unsigned long>(k);
    }
    if (!c.fits_ulong_p()) throw std::overflow_error("monomial count too large");
    return c.get_ui();
}

bool monomial_lower_bound_holds(std::size_t d, std::size_t r) {
    if (d == 0) return true;
    mpz_class rd, dd;
    mpz_ui_pow_ui(rd.get_mpz_t(), r, d);
    mpz_ui_pow_ui(dd.get_mpz_t(), d, d);
    return mpz_class(monomial_count(d, r)) * dd >= rd;
}

namespace {

void exponents_of_degree(std::size_t dim, unsigned deg, std::size_t pos, Exponent& cur,
                         std::vector<Exponent>& out) {
    if (pos + 1 == dim) {
        cur[pos] = deg;
        out.push_back(cur);
        return;
    }
    // Largest leading exponent first: lexicographically descending.
    for (unsigned e = deg + 1; e-- > 0;) {
        cur[pos] = e;
        exponents_of_degree(dim, deg - e, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {
    if (dim == 0) throw std::invalid_argument("monomial basis needs dim >= 1");
    exps_.reserve(monomial_count(dim, degree));
    Exponent cur(dim, 0);
    for (unsigned deg = 0; deg <= degree; ++deg) exponents_of_degree(dim, deg, 0, cur, exps_);
}

Vec MonomialBasis::evaluate(const Point& point) const {
    if (point.size() != dim_) throw std::invalid_argument("point has wrong dimension for basis");
    std::vector<Vec> powers(dim_, Vec{1});
    for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t e = 1; e <= degree_; ++e) powers[k].push_back(powers[k].back() * point[k]);
    Vec out;
    out.reserve(exps_.size());
    for (const auto& e : exps_) {
        Scalar v = 1;
        for (std::size_t k = 0; k < dim_; ++k)
            if (e[k] > 0) v *= powers[k][e[k]];
        out.push_back(std::move(v));
    }
    return out;
}

Vec MonomialBasis::coefficients(const Polynomial& f) const {
    if (f.dim() != dim_) throw std::invalid_argument("polynomial dimension does not match basis");
    if (f.degree() > static_cast<long>(degree_)) throw std::invalid_argument("polynomial degree exceeds basis bound");
    Vec out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) out[i] = f.coefficient(exps_[i]);
    return out;
}

Polynomial MonomialBasis::polynomial(const Vec& coeffs) const {
    if (coeffs.size() != exps_.size()) throw std::invalid_argument("coefficient vector has wrong length");
    Polynomial f(dim_);
    for (std::size_t i = 0; i < exps_.size(); ++i) f.set(exps_[i], coeffs[i]);
    return f;
}

ExactMatrix embed(const PointSet& V, std::size_t r) {
    const MonomialBasis basis(V.dim(), r);
    ExactMatrix M(V.size(), basis.size());
    const auto n = static_cast<std::ptrdiff_t>(V.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        Vec row = basis.evaluate(V[static_cast<std::size_t>(i)]);
        for (std::size_t j = 0; j < row.size(); ++j) M(static_cast<std::size_t>(i), j) = std::move(row[j]);
    }
    return M;
}

namespace {

void check_sz_args(const Polynomial& f, bool slice) {
    if (f.is_zero()) throw std::invalid_argument("zero-count bound needs a nonzero polynomial");
    if (slice) {
        if (!f.is_homogeneous()) throw std::invalid_argument("slice mode needs a homogeneous polynomial");
        if (f.dim() < 2) throw std::invalid_argument("slice mode needs dim >= 2");
    }
}

std::size_t grid_size(std::size_t base, std::size_t exponent) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < exponent; ++k) total *= base;
    return total;
}

// Decodes the mixed-radix index into a point of S^free, prefixed by 1 in slice mode.
Point grid_point(std::size_t index, const Vec& S, std::size_t dim, bool slice) {
    Point p(dim);
    std::size_t first = 0;
    if (slice) {
        p[0] = 1;
        first = 1;
    }
    for (std::size_t k = dim; k-- > first;) {
        p[k] = S[index % S.size()];
        index /= S.size();
    }
    return p;
}

}  // namespace

std::size_t sz_zero_count(const Polynomial& f, const Vec& S, bool homogeneous_slice) {
    check_sz_args(f, homogeneous_slice);
    if (S.empty()) return 0;
    const std::size_t free = f.dim() - (homogeneous_slice ? 1 : 0);
    const auto total = static_cast<std::ptrdiff_t>(grid_size(S.size(), free));
    std::size_t zeros = 0;
#pragma omp parallel for schedule(static) reduction(+ : zeros)
    for (std::ptrdiff_t idx = 0; idx < total; ++idx)
        if (f.eval(grid_point(static_cast<std::size_t>(idx), S, f.dim(), homogeneous_slice)).is_zero()) ++zeros;
    return zeros;
}

std::size_t sz_bound(const Polynomial& f, std::size_t set_size, bool homogeneous_slice) {
    check_sz_args(f, homogeneous_slice);
    const std::size_t exponent = f.dim() - (homogeneous_slice ? 2 : 1);
    return static_cast<std::size_t>(f.degree()) * grid_size(set_size, exponent);
}

namespace reference {

ExactMatrix embed(const PointSet& V, std::size_t r) {
    const MonomialBasis basis(V.dim(), r);
    ExactMatrix M(V.size(), basis.size());
    for (std::size_t i = 0; i < V.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Scalar v = 1;
            for (std::size_t k = 0; k < V.dim(); ++k)
                for (unsigned e = 0; e < basis[j][k]; ++e) v *= V[i][k];
            M(i, j) = v;
        }
    return M;
}

std::size_t sz_zero_count(const Polynomial& f, const Vec& S, bool homogeneous_slice) {
    check_sz_args(f, homogeneous_slice);
    if (S.empty()) return 0;
    const std::size_t d = f.dim();
    std::vector<std::size_t> digits(d, 0);
    const std::size_t first = homogeneous_slice ? 1 : 0;
    std::size_t zeros = 0;
    for (;;) {
        Point p(d);
        if (homogeneous_slice) p[0] = 1;
        for (std::size_t k = first; k < d; ++k) p[k] = S[digits[k]];
        if (f.eval(p).is_zero()) ++zeros;
        std::size_t k = d;
        while (k > first && ++digits[k - 1] == S.size()) digits[--k] = 0;
        if (k == first) break;
    }
    return zeros;
}

}  // namespace reference

}  // namespace richlines
