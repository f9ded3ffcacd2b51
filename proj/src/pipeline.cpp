#include "richlines/pipeline.hpp"

#include "richlines/configurations.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace richlines {

std::string_view status_name(ExtractStatus s) {
    switch (s) {
        case ExtractStatus::found: return "found";
        case ExtractStatus::no_rich_lines: return "no_rich_lines";
        case ExtractStatus::no_polynomial: return "no_polynomial";
        case ExtractStatus::no_flat_point: return "no_flat_point";
    }
    return "unknown";
}

namespace {

mpq_class as_q(std::size_t v) { return mpq_class(static_cast<unsigned long>(v)); }

// base^exp for a possibly negative exponent.
mpq_class qpow(std::size_t base, long exp) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), base, static_cast<unsigned long>(exp < 0 ? -exp : exp));
    if (exp >= 0) return mpq_class(z);
    mpq_class q(mpz_class(1), z);
    q.canonicalize();
    return q;
}

std::vector<std::size_t> degrees_in(const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                    const std::vector<std::size_t>& left) {
    std::map<std::size_t, std::size_t> deg;
    for (const auto& e : edges) ++deg[e.first];
    std::vector<std::size_t> out;
    for (auto a : left) out.push_back(deg[a]);
    return out;
}

std::size_t floor_to_size(const mpq_class& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f.fits_ulong_p() ? f.get_ui() : 0;
}

}  // namespace

ExtractResult extract_hyperplane(const PointSet& V, std::size_t r, const Constants& constants) {
    if (r < 2) throw std::invalid_argument("extract_hyperplane needs r >= 2");
    return extract_hyperplane(V, r, rich_lines(V, r), constants);
}

ExtractResult extract_hyperplane(const PointSet& V, std::size_t r, std::vector<Line> lines,
                                 const Constants& constants) {
    if (r < 2) throw std::invalid_argument("extract_hyperplane needs r >= 2");
    ExtractResult res;
    PipelineTrace& T = res.trace;
    T.n = V.size();
    T.d = V.dim();
    T.r = r;
    T.constants = constants;
    T.line_count = lines.size();
    if (lines.empty()) {
        T.status = res.status = ExtractStatus::no_rich_lines;
        T.warnings.push_back("no rich lines");
        return res;
    }

    const long d = static_cast<long>(T.d);
    T.alpha = as_q(T.line_count) * qpow(r, d) / (constants.C * as_q(T.n) * as_q(T.n));
    T.theorem_hypothesis = T.alpha >= 1;
    T.theorem_target = constants.C_prime * T.alpha * as_q(T.n) * qpow(r, 2 - d);
    if (!T.theorem_hypothesis) T.warnings.push_back("rich-line count below the theorem-scale hypothesis");

    // First refinement on I(V, L).
    const IncidenceGraph G = incidences(V, lines);
    T.incidences = G.size();
    T.k = mpq_class(as_q(T.incidences) / (4 * as_q(T.n)));
    const RefinementResult R1 = refine(G);
    T.first_refine_ok = check_refinement(G, R1).ok();
    T.refined_points = R1.left.size();
    T.refined_lines = R1.right.size();
    T.refined_incidences = R1.edges.size();

    // Dyadic split of V' by degree into L'.
    const DyadicPartition P = dyadic_partition(R1.left, degrees_in(R1.edges, R1.left), T.k, T.incidences);
    T.groups = P.groups;
    T.j = P.chosen_j();
    T.group_incidences = P.chosen_group().incidences;
    T.dyadic_witness = P.witness_holds;
    T.dyadic_fallback = P.argmax_fallback;

    T.r0 = as_q(r) / as_q(16 * T.j * T.j);
    T.r0_used = floor_to_size(T.r0);
    if (T.r0_used < 4) {
        T.r0_used = 4;
        T.r0_clamped = true;
        T.warnings.push_back("r0 below 4; clamped to 4");
    }
    T.k0 = T.k * qpow(2, static_cast<long>(T.j) - 3);

    // Second refinement on I(L', V'_j).
    const std::vector<std::size_t>& group = P.chosen_group().points;
    const std::unordered_set<std::size_t> in_group(group.begin(), group.end());
    IncidenceGraph G2;
    G2.left = group;
    std::sort(G2.left.begin(), G2.left.end());
    G2.right = R1.right;
    for (const auto& e : R1.edges)
        if (in_group.count(e.first)) G2.edges.push_back(e);
    const RefinementResult R2 = refine(G2);
    T.second_refine_ok = check_refinement(G2, R2).ok();
    T.final_points = R2.left.size();
    T.final_subset = R2.left;
    T.final_lines = R2.right.size();
    T.final_incidences = R2.edges.size();

    // V'' as its own point set, with L'' restricted to it.
    const PointSet sub = V.subset(R2.left);
    std::map<std::size_t, std::size_t> to_sub;
    for (std::size_t i = 0; i < R2.left.size(); ++i) to_sub[R2.left[i]] = i;
    std::map<std::size_t, std::vector<std::size_t>> on_line;
    for (const auto& [p, l] : R2.edges) on_line[l].push_back(to_sub.at(p));
    std::vector<Line> sub_lines;
    for (auto l : R2.right) {
        Line line = lines[l];
        line.incident = on_line[l];
        std::sort(line.incident.begin(), line.incident.end());
        sub_lines.push_back(std::move(line));
    }

    std::vector<Line> rich_in_sub;
    for (const auto& line : sub_lines)
        if (line.incident.size() >= T.r0_used) rich_in_sub.push_back(line);
    if (!rich_in_sub.empty())
        T.lemma = lemma_findpoly(sub, rich_in_sub, T.r0_used, LemmaMode::bounded, constants).certificate;

    auto vp = find_vanishing_poly(sub, T.r0_used - 2);
    if (!vp) {
        T.status = res.status = ExtractStatus::no_polynomial;
        T.warnings.push_back("no polynomial of degree <= r0 - 2 vanishes on V''");
        return res;
    }
    T.f = vp->f;
    T.f_degree = vp->degree;

    std::vector<Line> vanishing;
    for (const auto& line : sub_lines)
        if (vanishes_on_line(vp->f, line)) vanishing.push_back(line);
    T.vanishing_lines = vanishing.size();
    const Classification C = classify_flat_points(sub, vanishing, vp->f);
    T.flat_points = C.flat_count;
    T.joints = C.joint_count;
    T.joints_have_zero_gradient = C.joints_have_zero_gradient;

    // Best flat point, judged by how many points of V its hyperplane holds.
    std::size_t best_count = 0;
    for (const auto& pc : C.points) {
        if (pc.kind != PointKind::flat || pc.lines.empty()) continue;
        std::vector<Vec> dirs;
        for (auto li : pc.lines) dirs.push_back(vanishing[li].dir);
        const std::size_t original = R2.left[pc.point];
        auto h = best_hyperplane_through(V, V[original], dirs);
        if (!h) continue;
        auto members = h->members(V);
        if (!T.flat_point || members.size() > best_count) {
            best_count = members.size();
            T.flat_point = original;
            T.hyperplane = *h;
            res.subset = std::move(members);
        }
    }
    T.subset_bound = (T.r0 - 1) * T.k0;
    if (!T.flat_point) {
        T.status = res.status = ExtractStatus::no_flat_point;
        T.warnings.push_back("no flat point with a vanishing line");
        return res;
    }
    T.subset_size = res.subset.size();
    T.subset_bound_holds = as_q(T.subset_size) >= T.subset_bound;
    res.hyperplane = T.hyperplane;
    T.status = res.status = ExtractStatus::found;
    return res;
}

APHyperplaneResult ap_hyperplane(const PointSet& V, std::size_t r, std::size_t l, const Constants& constants) {
    if (r < 2) throw std::invalid_argument("ap_hyperplane needs r >= 2");
    if (l == 0) throw std::invalid_argument("ap_hyperplane needs l >= 1");
    APHyperplaneResult out;
    const PointSet P = power(V, l);
    check_size_cap(r * P.size(), size_cap(), "ap_hyperplane lift");

    const APCount aps = count_aps(P, r, true);
    out.progressions = aps.count;
    if (aps.count == 0) return out;

    const PointSet W = progression_lift(P, r);
    std::vector<Line> lines;
    std::unordered_set<Line, LineKeyHash> distinct;
    for (const auto& ap : aps.progressions) {
        Line line = lift_progression(ap, W, P.size());
        distinct.insert(line);
        lines.push_back(std::move(line));
    }
    out.lifted_lines = distinct.size();
    out.lifting_injective = distinct.size() == aps.count;
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.incident < b.incident; });

    out.lifted = extract_hyperplane(W, r, std::move(lines), constants);
    if (!out.lifted.found()) return out;

    const Hyperplane& H = *out.lifted.hyperplane;
    out.not_a_slice = !is_zero(Vec(H.normal.begin() + 1, H.normal.end()));
    if (!out.not_a_slice) throw std::logic_error("lifted hyperplane is a slice z1 = const");

    std::vector<std::size_t> per_slice(r, 0);
    for (auto idx : out.lifted.subset) ++per_slice[idx / P.size()];
    out.slice = static_cast<std::size_t>(std::max_element(per_slice.begin(), per_slice.end()) - per_slice.begin());
    for (auto idx : out.lifted.subset)
        if (idx / P.size() == out.slice) out.slice_points.push_back(idx);

    const Vec rest(H.normal.begin() + 1, H.normal.end());
    out.projected = Hyperplane::make(rest, H.offset - Scalar(static_cast<long>(out.slice)) * H.normal[0]);
    out.projection = hyperplane_from_product(*out.projected, V, l);
    out.found = true;
    return out;
}

}  // namespace richlines
