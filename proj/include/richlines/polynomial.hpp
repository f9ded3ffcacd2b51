#pragma once

#include "richlines/scalar.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace richlines {

using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

/// Graded lexicographic order: lower total degree first; within a degree,
/// lexicographically larger exponent vectors first (x1^2 before x1*x2 before x2^2).
struct GradedLex {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial over Q(i). Zero coefficients are never stored.
class Polynomial {
public:
    using Terms = std::map<Exponent, Scalar, GradedLex>;

    Polynomial() = default;
    explicit Polynomial(std::size_t dim) : dim_(dim) {}

    static Polynomial constant(std::size_t dim, const Scalar& c);
    static Polynomial variable(std::size_t dim, std::size_t k);  // x_{k+1}

    std::size_t dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Total degree; -1 for the zero polynomial.
    long degree() const;
    bool is_homogeneous() const;

    Scalar coefficient(const Exponent& e) const;
    void set(const Exponent& e, Scalar c);
    void add_term(const Exponent& e, const Scalar& c);

    Scalar operator()(const Vec& point) const { return eval(point); }
    Scalar eval(const Vec& point) const;

    Polynomial derivative(std::size_t k) const;
    std::vector<Polynomial> gradient() const;

    /// Sum of the terms of top total degree; throws std::invalid_argument for zero.
    Polynomial homogeneous_part() const;

    /// Coefficients (constant term first) of g(t) = f(base + t*dir).
    Vec restrict_to_line(const Vec& base, const Vec& dir) const;

    /// Divides through by the first coefficient in graded-lex order.
    Polynomial monic() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Scalar& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    std::size_t dim_ = 0;
    Terms terms_;
};

/// Human-readable rendering, e.g. "x1^2 + x2^2 - 25".
std::string to_string(const Polynomial& f);

}  // namespace richlines
