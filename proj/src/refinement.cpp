#include "richlines/refinement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace richlines {

IncidenceGraph RefinementResult::induced() const {
    IncidenceGraph g;
    g.left = original.left;
    g.right = original.right;
    g.edges = edges;
    return g;
}

namespace {

mpq_class ratio(std::size_t num, std::size_t den) {
    mpq_class q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
    q.canonicalize();
    return q;
}

bool below(std::size_t degree, const mpq_class& threshold) {
    return mpq_class(static_cast<unsigned long>(degree)) < threshold;
}

}  // namespace

RefinementResult refine(const IncidenceGraph& G) {
    if (G.edges.empty()) throw std::invalid_argument("refine needs a nonempty edge set");
    RefinementResult R;
    R.original = G;
    R.left_threshold = ratio(G.edges.size(), 4 * G.left.size());
    R.right_threshold = ratio(G.edges.size(), 4 * G.right.size());

    std::map<std::size_t, std::set<std::size_t>> adj_left, adj_right;
    for (auto a : G.left) adj_left[a];
    for (auto b : G.right) adj_right[b];
    for (const auto& [a, b] : G.edges) {
        if (!adj_left.count(a) || !adj_right.count(b))
            throw std::invalid_argument("edge endpoint is not a graph vertex");
        adj_left[a].insert(b);
        adj_right[b].insert(a);
    }

    // Work set of violating vertices; (false, v) is a left vertex and sorts first.
    std::set<std::pair<bool, std::size_t>> work;
    auto side_is_left = [](bool right_flag) { return !right_flag; };
    for (const auto& [a, nb] : adj_left)
        if (below(nb.size(), R.left_threshold)) work.insert({false, a});
    for (const auto& [b, nb] : adj_right)
        if (below(nb.size(), R.right_threshold)) work.insert({true, b});

    while (!work.empty()) {
        auto [is_right, v] = *work.begin();
        work.erase(work.begin());
        auto& own = is_right ? adj_right : adj_left;
        auto& other = is_right ? adj_left : adj_right;
        const mpq_class& other_threshold = is_right ? R.left_threshold : R.right_threshold;
        auto it = own.find(v);
        R.removals.push_back({side_is_left(is_right), v, it->second.size()});
        for (auto u : it->second) {
            auto& nb = other[u];
            nb.erase(v);
            if (below(nb.size(), other_threshold)) work.insert({!is_right, u});
        }
        own.erase(it);
    }

    for (const auto& [a, nb] : adj_left) {
        R.left.push_back(a);
        for (auto b : nb) R.edges.emplace_back(a, b);
    }
    for (const auto& [b, nb] : adj_right) R.right.push_back(b);
    std::sort(R.edges.begin(), R.edges.end());
    return R;
}

RefinementCheck check_refinement(const IncidenceGraph& G, const RefinementResult& R) {
    RefinementCheck c;
    const std::size_t E = G.edges.size();
    const mpq_class lt = ratio(E, 4 * G.left.size());
    const mpq_class rt = ratio(E, 4 * G.right.size());
    std::map<std::size_t, std::size_t> dl, dr;
    std::set<std::pair<std::size_t, std::size_t>> original(G.edges.begin(), G.edges.end());
    std::set<std::size_t> left(R.left.begin(), R.left.end()), right(R.right.begin(), R.right.end());
    std::size_t induced = 0;
    for (const auto& e : original)
        if (left.count(e.first) && right.count(e.second)) {
            ++induced;
            ++dl[e.first];
            ++dr[e.second];
        }
    for (auto a : R.left)
        if (below(dl[a], lt)) c.left_degrees_ok = false;
    for (auto b : R.right)
        if (below(dr[b], rt)) c.right_degrees_ok = false;
    c.half_edges_kept = 2 * induced >= E;
    c.nonempty = !R.left.empty() && !R.right.empty();
    return c;
}

DyadicPartition dyadic_partition(const std::vector<std::size_t>& points, const std::vector<std::size_t>& degrees,
                                 const mpq_class& k, std::optional<std::size_t> total_incidences) {
    if (points.size() != degrees.size()) throw std::invalid_argument("points and degrees differ in length");
    if (points.empty()) throw std::invalid_argument("dyadic partition of an empty set");
    if (sgn(k) <= 0) throw std::invalid_argument("dyadic threshold must be positive");

    std::map<std::size_t, DyadicGroup> by_j;
    std::size_t degree_sum = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const mpq_class deg(static_cast<unsigned long>(degrees[i]));
        if (deg < k) throw std::invalid_argument("degree below the dyadic threshold");
        std::size_t j = 1;
        mpq_class upper = 2 * k;
        while (deg >= upper) {
            upper *= 2;
            ++j;
        }
        auto& g = by_j[j];
        g.j = j;
        g.points.push_back(points[i]);
        g.incidences += degrees[i];
        degree_sum += degrees[i];
    }

    DyadicPartition P;
    P.k = k;
    P.total_incidences = total_incidences.value_or(degree_sum);
    for (auto& [j, g] : by_j) P.groups.push_back(std::move(g));

    const auto meets = [&](const DyadicGroup& g) {
        return mpq_class(static_cast<unsigned long>(4 * g.j * g.j * g.incidences)) >=
               mpq_class(static_cast<unsigned long>(P.total_incidences));
    };
    for (std::size_t i = 1; i < P.groups.size(); ++i)
        if (P.groups[i].incidences > P.groups[P.chosen].incidences) P.chosen = i;
    if (!meets(P.groups[P.chosen])) {
        P.argmax_fallback = true;
        for (std::size_t i = 0; i < P.groups.size(); ++i) {
            const auto& g = P.groups[i];
            const auto& c = P.groups[P.chosen];
            if (g.j * g.j * g.incidences > c.j * c.j * c.incidences) P.chosen = i;
        }
    }
    P.witness_holds = meets(P.groups[P.chosen]);
    return P;
}

}  // namespace richlines
