#pragma once

#include "richlines/json_io.hpp"
#include "richlines/line.hpp"
#include "richlines/point_set.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace richlines {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
};

Json to_json(const SuiteReport& report);

/// Property checks for the constructions: collinear Veronese independence,
/// tuple covers and design matrices, refinement, progression lifting and
/// products, product hyperplanes, zero counts and the sum-product family.
SuiteReport run_claims_suite(std::uint64_t seed = 1);

/// Bound-formula arithmetic, grid rich-line counts and their scaling, pasted
/// grids and the sum-product family count.
SuiteReport run_bounds_suite(std::uint64_t seed = 1);

/// Rich lines found by testing every point against every pair (cubic time).
/// Used to audit small reports.
std::vector<std::vector<std::size_t>> audit_rich_lines(const PointSet& V, std::size_t r);

/// Incidence lists of `lines`, sorted, for comparison with audit_rich_lines.
std::vector<std::vector<std::size_t>> incidence_lists(const std::vector<Line>& lines);

}  // namespace richlines
