#include "richlines/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace richlines {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::constant(std::size_t dim, const Scalar& c) {
    Polynomial f(dim);
    f.set(Exponent(dim, 0), c);
    return f;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t k) {
    if (k >= dim) throw std::out_of_range("variable index out of range");
    Exponent e(dim, 0);
    e[k] = 1;
    Polynomial f(dim);
    f.set(e, 1);
    return f;
}

long Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<long>(total_degree(terms_.rbegin()->first));
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned top = total_degree(terms_.rbegin()->first);
    return total_degree(terms_.begin()->first) == top;
}

Scalar Polynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
}

void Polynomial::set(const Exponent& e, Scalar c) {
    if (e.size() != dim_) throw std::invalid_argument("exponent length does not match polynomial dimension");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

void Polynomial::add_term(const Exponent& e, const Scalar& c) {
    if (c.is_zero()) return;
    if (e.size() != dim_) throw std::invalid_argument("exponent length does not match polynomial dimension");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar Polynomial::eval(const Vec& point) const {
    if (point.size() != dim_) throw std::invalid_argument("evaluation point has wrong dimension");
    // Cache powers per coordinate up to the largest exponent used.
    std::vector<Vec> powers(dim_);
    for (const auto& [e, c] : terms_)
        for (std::size_t k = 0; k < dim_; ++k) {
            auto& pk = powers[k];
            if (pk.empty()) pk.push_back(1);
            while (pk.size() <= e[k]) pk.push_back(pk.back() * point[k]);
        }
    Scalar acc;
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (std::size_t k = 0; k < dim_ && !term.is_zero(); ++k)
            if (e[k] > 0) term *= powers[k][e[k]];
        acc += term;
    }
    return acc;
}

Polynomial Polynomial::derivative(std::size_t k) const {
    if (k >= dim_) throw std::out_of_range("derivative index out of range");
    Polynomial out(dim_);
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) continue;
        Exponent de = e;
        --de[k];
        out.add_term(de, c * Scalar(static_cast<long>(e[k])));
    }
    return out;
}

std::vector<Polynomial> Polynomial::gradient() const {
    std::vector<Polynomial> out;
    out.reserve(dim_);
    for (std::size_t k = 0; k < dim_; ++k) out.push_back(derivative(k));
    return out;
}

Polynomial Polynomial::homogeneous_part() const {
    if (is_zero()) throw std::invalid_argument("homogeneous part of the zero polynomial");
    const unsigned top = static_cast<unsigned>(degree());
    Polynomial out(dim_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == top) out.set(e, c);
    return out;
}

namespace {

// Coefficients of (a + t*b)^p, constant term first.
Vec binomial_power(const Scalar& a, const Scalar& b, unsigned p) {
    Vec poly{1};
    for (unsigned step = 0; step < p; ++step) {
        Vec next(poly.size() + 1);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            if (poly[k].is_zero()) continue;
            if (!a.is_zero()) next[k] += poly[k] * a;
            if (!b.is_zero()) next[k + 1] += poly[k] * b;
        }
        poly = std::move(next);
    }
    return poly;
}

Vec multiply_univariate(const Vec& x, const Vec& y) {
    Vec out(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero()) out[i + j] += x[i] * y[j];
    }
    return out;
}

}  // namespace

Vec Polynomial::restrict_to_line(const Vec& base, const Vec& dir) const {
    if (base.size() != dim_ || dir.size() != dim_) throw std::invalid_argument("line has wrong dimension");
    const std::size_t top = is_zero() ? 0 : static_cast<std::size_t>(degree());
    Vec g(top + 1);
    for (const auto& [e, c] : terms_) {
        Vec term{c};
        for (std::size_t k = 0; k < dim_; ++k)
            if (e[k] > 0) term = multiply_univariate(term, binomial_power(base[k], dir[k], e[k]));
        for (std::size_t k = 0; k < term.size(); ++k) g[k] += term[k];
    }
    return g;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Polynomial out(*this);
    const Scalar inv = terms_.begin()->second.inverse();
    for (auto& [e, c] : out.terms_) c *= inv;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("polynomial dimension mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("polynomial dimension mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("polynomial dimension mismatch");
    Polynomial out(a.dim_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e(ea);
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            out.add_term(e, ca * cb);
        }
    return out;
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest degree first, basis order within a degree.
    std::vector<const Polynomial::Terms::value_type*> order;
    for (const auto& term : f.terms()) order.push_back(&term);
    std::stable_sort(order.begin(), order.end(),
                     [](auto* a, auto* b) { return total_degree(a->first) > total_degree(b->first); });
    for (const auto* term : order) {
        const auto& [e, c] = *term;
        std::string coef = c.is_real() ? c.re().get_str() : "(" + c.str() + ")";
        bool negative = c.is_real() && sgn(c.re()) < 0;
        if (negative) coef = mpq_class(-c.re()).get_str();
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << "-";
        first = false;

        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(k + 1);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty())
            os << coef;
        else if (coef == "1")
            os << mono;
        else
            os << coef << "*" << mono;
    }
    return os.str();
}

}  // namespace richlines
