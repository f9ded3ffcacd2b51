#pragma once

#include "richlines/flats.hpp"
#include "richlines/incidence.hpp"
#include "richlines/refinement.hpp"
#include "richlines/vanishing.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace richlines {

enum class ExtractStatus { found, no_rich_lines, no_polynomial, no_flat_point };

std::string_view status_name(ExtractStatus s);

/// Every quantity produced along the hyperplane-extraction pipeline.
struct PipelineTrace {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t r = 0;
    Constants constants;

    // Theorem-scale hypothesis: alpha = |L| r^d / (C n^2) >= 1.
    std::size_t line_count = 0;
    mpq_class alpha;
    bool theorem_hypothesis = false;
    mpq_class theorem_target;  // C' alpha n / r^(d-2)

    std::size_t incidences = 0;  // |I|
    mpq_class k;                 // |I| / (4n)

    std::size_t refined_points = 0;  // |V'|
    std::size_t refined_lines = 0;   // |L'|
    std::size_t refined_incidences = 0;
    bool first_refine_ok = false;

    std::vector<DyadicGroup> groups;
    std::size_t j = 0;
    std::size_t group_incidences = 0;  // |I'_j|
    bool dyadic_witness = false;
    bool dyadic_fallback = false;

    mpq_class r0;            // r / (16 j^2)
    std::size_t r0_used = 0; // floor(r0), clamped to >= 4
    bool r0_clamped = false;
    mpq_class k0;            // 2^(j-3) k

    std::size_t final_points = 0;  // |V''|
    std::vector<std::size_t> final_subset;  // V'' as indices into V
    std::size_t final_lines = 0;   // |L''|
    std::size_t final_incidences = 0;
    bool second_refine_ok = false;

    std::optional<LemmaCertificate> lemma;  // when L'' has r0-rich lines w.r.t. V''
    std::optional<Polynomial> f;
    std::size_t f_degree = 0;
    std::size_t vanishing_lines = 0;  // lines of L'' on which f vanishes
    std::size_t flat_points = 0;
    std::size_t joints = 0;
    bool joints_have_zero_gradient = true;

    std::optional<std::size_t> flat_point;  // index into V
    std::optional<Hyperplane> hyperplane;
    std::size_t subset_size = 0;
    mpq_class subset_bound;  // (r0 - 1) k0
    bool subset_bound_holds = false;

    ExtractStatus status = ExtractStatus::no_rich_lines;
    std::vector<std::string> warnings;
};

struct ExtractResult {
    ExtractStatus status = ExtractStatus::no_rich_lines;
    std::optional<Hyperplane> hyperplane;
    std::vector<std::size_t> subset;  // V cap H, indices into V
    PipelineTrace trace;

    bool found() const { return status == ExtractStatus::found; }
};

/*
 * refine(I(V, L)) -> dyadic split by line degree -> refine the chosen class
 * -> minimal-degree f vanishing on V'' (degree <= r0 - 2) -> classify the
 * points of V'' against the lines of L'' on which f vanishes -> hyperplane
 * of the best flat point. L defaults to the r-rich lines of V.
 */
ExtractResult extract_hyperplane(const PointSet& V, std::size_t r, const Constants& constants);
ExtractResult extract_hyperplane(const PointSet& V, std::size_t r, std::vector<Line> lines,
                                 const Constants& constants);

struct APHyperplaneResult {
    bool found = false;
    std::size_t progressions = 0;       // AP_r(V^l)
    std::size_t lifted_lines = 0;       // distinct lines after lifting
    bool lifting_injective = false;
    ExtractResult lifted;               // pipeline run on {0..r-1} x V^l
    bool not_a_slice = false;           // H is not {z1 = const}
    std::size_t slice = 0;              // chosen z1 value
    std::vector<std::size_t> slice_points;  // indices into the lift, all with z1 = slice
    std::optional<Hyperplane> projected;    // hyperplane of C^(dl)
    std::optional<ProductProjection> projection;  // final hyperplane of C^d
};

/// Lifts the r-term progressions of V^l to rich lines of {0..r-1} x V^l, finds a
/// hyperplane there, slices it at the best z1 = j and pulls it back to C^d.
APHyperplaneResult ap_hyperplane(const PointSet& V, std::size_t r, std::size_t l, const Constants& constants);

}  // namespace richlines
