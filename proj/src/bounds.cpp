#include "richlines/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace richlines {

namespace {

mpq_class q(std::size_t v) { return mpq_class(static_cast<unsigned long>(v)); }

mpq_class rpow(std::size_t r, std::size_t e) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), r, e);
    return mpq_class(z);
}

double log_of(const mpq_class& v) {
    // log(num) - log(den) stays finite for huge exact values.
    long en = 0, ed = 0;
    const double mn = mpz_get_d_2exp(&en, v.get_num_mpz_t());
    const double md = mpz_get_d_2exp(&ed, v.get_den_mpz_t());
    return std::log(mn) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

}  // namespace

std::vector<BoundTerm> bound_terms(std::size_t n, std::size_t r, std::size_t d,
                                   const std::map<std::size_t, std::size_t>& s) {
    if (r < 2) throw std::invalid_argument("bound terms need r >= 2");
    const mpq_class N = q(n);
    const mpq_class N2 = N * N;
    std::vector<BoundTerm> t;
    t.push_back({"n^2/r^3", N2 / rpow(r, 3)});
    t.push_back({"n/r", N / q(r)});
    t.push_back({"n^2/r^(d+1)", N2 / rpow(r, d + 1)});
    t.push_back({"n^2/r^d", N2 / rpow(r, d)});
    t.push_back({"n^2/r^4", N2 / rpow(r, 4)});
    t.push_back({"n^2/r^5", N2 / rpow(r, 5)});
    if (d >= 2 && s.count(d - 1)) t.push_back({"n*s_(d-1)/r^2", N * q(s.at(d - 1)) / rpow(r, 2)});
    if (d >= 3) {
        bool complete = true;
        mpq_class sum = 0;
        for (std::size_t l = 2; l + 1 <= d; ++l) {
            if (!s.count(l)) {
                complete = false;
                break;
            }
            sum += N * q(s.at(l)) / rpow(r, l + 1);
        }
        if (complete) t.push_back({"sum n*s_l/r^(l+1)", sum});
    }
    if (s.count(2)) t.push_back({"n*s_2/r^3", N * q(s.at(2)) / rpow(r, 3)});
    if (s.count(3)) t.push_back({"n*s_3/r^4", N * q(s.at(3)) / rpow(r, 4)});
    for (auto& term : t) term.value.canonicalize();
    return t;
}

std::optional<mpq_class> find_term(const std::vector<BoundTerm>& terms, const std::string& name) {
    for (const auto& t : terms)
        if (t.name == name) return t.value;
    return std::nullopt;
}

BoundReport make_bound_report(std::string id, std::size_t n, std::size_t r, std::size_t d,
                              std::map<std::string, std::size_t> measured,
                              const std::map<std::size_t, std::size_t>& s) {
    BoundReport rep;
    rep.id = std::move(id);
    rep.n = n;
    rep.r = r;
    rep.d = d;
    rep.measured = std::move(measured);
    for (const auto& [l, v] : s) rep.measured["s_" + std::to_string(l)] = v;
    rep.terms = bound_terms(n, r, d, s);
    auto it = rep.measured.find("lines");
    if (it != rep.measured.end())
        for (const auto& t : rep.terms)
            if (sgn(t.value) != 0) {
                mpq_class ratio = q(it->second) / t.value;
                ratio.canonicalize();
                rep.ratios.emplace_back(t.name, ratio);
            }
    return rep;
}

double loglog_slope(const std::vector<std::pair<mpq_class, mpq_class>>& points) {
    if (points.size() < 2) throw std::invalid_argument("slope needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : points) {
        if (sgn(x) <= 0 || sgn(y) <= 0) throw std::invalid_argument("log-log slope needs positive values");
        const double lx = log_of(x), ly = log_of(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double m = static_cast<double>(points.size());
    const double den = m * sxx - sx * sx;
    if (den == 0) throw std::invalid_argument("log-log slope needs distinct x values");
    return (m * sxy - sx * sy) / den;
}

}  // namespace richlines
