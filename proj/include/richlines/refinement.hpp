#pragma once

#include "richlines/incidence.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace richlines {

struct Removal {
    bool left_side;
    std::size_t vertex;
    std::size_t degree;  // degree at removal time
};

struct RefinementResult {
    IncidenceGraph original;
    std::vector<std::size_t> left;   // surviving left vertices A'
    std::vector<std::size_t> right;  // surviving right vertices B'
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // E', induced
    std::vector<Removal> removals;
    mpq_class left_threshold;   // |E| / (4|A|)
    mpq_class right_threshold;  // |E| / (4|B|)

    /// The refined graph on the original vertex universes with edge set E'.
    IncidenceGraph induced() const;
};

/*
 * Repeatedly deletes a vertex whose current degree is below its side's
 * threshold (fixed from the input graph), until none is left. Among the
 * violating vertices the left side goes first, then the lowest index.
 * Every removal deletes fewer than threshold edges, so at most |E|/2 edges
 * are lost in total.
 *
 * Throws std::invalid_argument for an empty edge set.
 */
RefinementResult refine(const IncidenceGraph& G);

struct RefinementCheck {
    bool left_degrees_ok = true;
    bool right_degrees_ok = true;
    bool half_edges_kept = true;
    bool nonempty = true;
    bool ok() const { return left_degrees_ok && right_degrees_ok && half_edges_kept && nonempty; }
};

/// Checks the refinement guarantees from the result alone.
RefinementCheck check_refinement(const IncidenceGraph& G, const RefinementResult& R);

struct DyadicGroup {
    std::size_t j = 0;
    std::vector<std::size_t> points;
    std::size_t incidences = 0;  // sum of the members' degrees
};

struct DyadicPartition {
    mpq_class k;
    std::vector<DyadicGroup> groups;  // nonempty groups, increasing j
    std::size_t chosen = 0;           // position of the chosen group in `groups`
    std::size_t total_incidences = 0;
    bool witness_holds = false;       // |I'_j*| >= |I| / (4 j*^2)
    bool argmax_fallback = false;     // the largest group missed the bound

    const DyadicGroup& chosen_group() const { return groups.at(chosen); }
    std::size_t chosen_j() const { return chosen_group().j; }
};

/*
 * Splits points by degree into [2^(j-1) k, 2^j k), j >= 1.
 *
 * The chosen group maximizes its incidence count (ties: smallest j). If that
 * group misses |I|/(4j^2), the group maximizing j^2 |I'_j| is taken instead;
 * one always meets the bound because the sum over j of 1/(4j^2) is below 1/2.
 * `total_incidences` is |I|; when absent the sum of the given degrees is used.
 *
 * Throws std::invalid_argument if a degree is below k, k <= 0, or the
 * input is empty.
 */
DyadicPartition dyadic_partition(const std::vector<std::size_t>& points, const std::vector<std::size_t>& degrees,
                                 const mpq_class& k, std::optional<std::size_t> total_incidences = std::nullopt);

}  // namespace richlines
