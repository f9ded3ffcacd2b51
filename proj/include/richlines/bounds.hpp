#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace richlines {

struct BoundTerm {
    std::string name;  // e.g. "n^2/r^3"
    mpq_class value;
};

/*
 * Upper-bound formula terms for rich-line and progression counts, as exact
 * rationals with no constants applied:
 *
 *   n^2/r^3, n/r, n^2/r^(d+1), n^2/r^d, n^2/r^4, n^2/r^5,
 *   n*s_(d-1)/r^2, sum_{l=2}^{d-1} n*s_l/r^(l+1), n*s_2/r^3, n*s_3/r^4
 *
 * `s` maps l to s_l, the most points of V in one l-flat. Terms whose s
 * values are missing are left out. Throws std::invalid_argument for r < 2.
 */
std::vector<BoundTerm> bound_terms(std::size_t n, std::size_t r, std::size_t d,
                                   const std::map<std::size_t, std::size_t>& s = {});

std::optional<mpq_class> find_term(const std::vector<BoundTerm>& terms, const std::string& name);

struct BoundReport {
    std::string id;
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t d = 0;
    std::map<std::string, std::size_t> measured;  // "lines", "aps", "incidences", "s_1", ...
    std::vector<BoundTerm> terms;
    std::vector<std::pair<std::string, mpq_class>> ratios;  // measured "lines" / term
};

/// Fills `terms` and the ratio of measured "lines" to every nonzero term.
BoundReport make_bound_report(std::string id, std::size_t n, std::size_t r, std::size_t d,
                              std::map<std::string, std::size_t> measured,
                              const std::map<std::size_t, std::size_t>& s = {});

/// Least-squares slope of log(y) against log(x). Inputs must be positive.
double loglog_slope(const std::vector<std::pair<mpq_class, mpq_class>>& points);

}  // namespace richlines
