#include "richlines/experiment.hpp"

#include "richlines/bounds.hpp"
#include "richlines/flats.hpp"
#include "richlines/incidence.hpp"
#include "richlines/pipeline.hpp"
#include "richlines/suites.hpp"
#include "richlines/vanishing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace richlines {

namespace {

constexpr std::size_t kAuditLimit = 60;
constexpr std::size_t kFlatSearchLimit = 120;

const std::vector<std::string> kKnownPipelines{"apcount", "flats", "hyperplane", "lemma"};

template <typename T>
T field(const Json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("field \"") + key + "\": " + e.what());
    }
}

mpq_class parse_rational(const Json& j) {
    const Scalar s = scalar_from_json(j);
    if (!s.is_real()) throw FormatError("constant must be rational");
    return s.re();
}

}  // namespace

bool ExperimentConfig::wants(const std::string& pipeline) const {
    return std::find(pipelines.begin(), pipelines.end(), pipeline) != pipelines.end();
}

GeneratorSpec generator_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("generator must be an object");
    GeneratorSpec s;
    s.kind = field<std::string>(j, "kind", "grid");
    s.d = field<std::size_t>(j, "d", s.d);
    s.h = field<std::size_t>(j, "h", s.h);
    s.l = field<std::size_t>(j, "l", s.l);
    s.copies = field<std::size_t>(j, "copies", s.copies);
    if (j.contains("A")) s.A = vec_from_json(j.at("A"));
    if (j.contains("Q")) s.Q = vec_from_json(j.at("Q"));
    s.n = field<std::size_t>(j, "n", s.n);
    s.coord_range = field<std::int64_t>(j, "coord_range", s.coord_range);
    s.seed = field<std::uint64_t>(j, "seed", s.seed);
    s.base_kind = field<std::string>(j, "base_kind", s.base_kind);
    s.base_d = field<std::size_t>(j, "base_d", s.base_d);
    return s;
}

Json to_json(const GeneratorSpec& s) {
    Json j;
    j["kind"] = s.kind;
    j["d"] = s.d;
    j["h"] = s.h;
    j["l"] = s.l;
    j["copies"] = s.copies;
    j["A"] = to_json(s.A);
    j["Q"] = to_json(s.Q);
    j["n"] = s.n;
    j["coord_range"] = s.coord_range;
    j["seed"] = s.seed;
    j["base_kind"] = s.base_kind;
    j["base_d"] = s.base_d;
    return j;
}

ExperimentConfig parse_experiment_config(const Json& j) {
    if (!j.is_object()) throw FormatError("experiment config must be a JSON object");
    ExperimentConfig cfg;
    cfg.id = field<std::string>(j, "id", cfg.id);
    if (!j.contains("generator")) throw FormatError("experiment config needs \"generator\"");
    cfg.generator = generator_from_json(j.at("generator"));
    cfg.h_values = field<std::vector<std::size_t>>(j, "h", {});
    cfg.r_values = field<std::vector<std::size_t>>(j, "r", {});
    if (cfg.r_values.empty()) throw FormatError("experiment config needs a nonempty \"r\" list");
    for (auto r : cfg.r_values)
        if (r < 2) throw FormatError("every r must be >= 2");
    cfg.pipelines = field<std::vector<std::string>>(j, "pipelines", {});
    for (const auto& p : cfg.pipelines)
        if (std::find(kKnownPipelines.begin(), kKnownPipelines.end(), p) == kKnownPipelines.end())
            throw FormatError("unknown pipeline \"" + p + "\"");
    if (j.contains("constants")) {
        const Json& c = j.at("constants");
        if (c.contains("C_d")) cfg.C = parse_rational(c.at("C_d"));
        if (c.contains("C_prime_d")) cfg.C_prime = parse_rational(c.at("C_prime_d"));
    }
    if (j.contains("output")) {
        cfg.json_out = field<std::string>(j.at("output"), "json", "");
        cfg.csv_out = field<std::string>(j.at("output"), "csv", "");
    }
    cfg.seed = field<std::uint64_t>(j, "seed", cfg.seed);
    return cfg;
}

Json to_json(const ExperimentConfig& cfg) {
    Json j;
    j["id"] = cfg.id;
    j["generator"] = to_json(cfg.generator);
    j["h"] = cfg.h_values;
    j["r"] = cfg.r_values;
    j["pipelines"] = cfg.pipelines;
    Json c = Json::object();
    if (cfg.C) c["C_d"] = to_json(*cfg.C);
    if (cfg.C_prime) c["C_prime_d"] = to_json(*cfg.C_prime);
    j["constants"] = std::move(c);
    j["output"] = {{"json", cfg.json_out}, {"csv", cfg.csv_out}};
    j["seed"] = cfg.seed;
    return j;
}

namespace {

struct Row {
    std::size_t h = 0;
    std::size_t r = 0;
    std::size_t n = 0;
    std::size_t d = 0;
    BoundReport bounds;
    Json json;
};

const std::vector<std::string> kTermNames{"n^2/r^3",          "n/r",          "n^2/r^(d+1)",
                                          "n^2/r^d",          "n^2/r^4",      "n^2/r^5",
                                          "n*s_(d-1)/r^2",    "sum n*s_l/r^(l+1)", "n*s_2/r^3",
                                          "n*s_3/r^4"};

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

}  // namespace

ExperimentOutput run_experiment(const ExperimentConfig& cfg) {
    ExperimentOutput out;
    std::vector<std::size_t> hs = cfg.h_values;
    if (hs.empty()) hs.push_back(cfg.generator.h);

    std::vector<Row> rows;
    for (std::size_t h : hs) {
        GeneratorSpec spec = cfg.generator;
        spec.h = h;
        if (spec.kind == "random" && spec.seed == 0) spec.seed = cfg.seed;
        const PointSet V = generate(spec);
        Constants constants = Constants::defaults(V.dim());
        if (cfg.C) {
            constants.C = *cfg.C;
            constants.C_prime = *cfg.C / 2048;
        }
        if (cfg.C_prime) constants.C_prime = *cfg.C_prime;

        // Flat statistics do not depend on r.
        std::map<std::size_t, std::size_t> s;
        if (cfg.wants("flats") && V.size() <= kFlatSearchLimit && V.dim() >= 2) {
            s[V.dim() - 1] = max_hyperplane_subset(V).count;
            for (std::size_t l = 1; l + 1 < V.dim() && l <= 3; ++l) s[l] = max_flat_subset(V, l).count;
        }

        for (std::size_t r : cfg.r_values) {
            Row row;
            row.h = h;
            row.r = r;
            row.n = V.size();
            row.d = V.dim();
            Json inv = Json::object();

            const auto lines = rich_lines(V, r);
            const IncidenceGraph I = incidences(V, lines);
            inv["incidences_at_least_r_lines"] = I.size() >= r * lines.size();
            if (V.size() <= kAuditLimit) inv["audit_matches"] = incidence_lists(lines) == audit_rich_lines(V, r);

            std::map<std::string, std::size_t> measured{{"lines", lines.size()}, {"incidences", I.size()}};
            if (cfg.wants("apcount")) measured["aps"] = count_aps(V, r, false).count;
            row.bounds = make_bound_report(cfg.id, V.size(), r, V.dim(), measured, s);

            Json j;
            j["h"] = h;
            j["r"] = r;
            j["n"] = V.size();
            j["d"] = V.dim();
            j["field"] = std::string(field_tag(V.field()));
            Json m = Json::object();
            for (const auto& [k, v] : row.bounds.measured) m[k] = v;
            j["measured"] = std::move(m);
            Json terms = Json::object();
            for (const auto& t : row.bounds.terms) terms[t.name] = to_json(t.value);
            j["terms"] = std::move(terms);
            Json ratios = Json::object();
            for (const auto& [name, v] : row.bounds.ratios) ratios[name] = to_json(v);
            j["ratios"] = std::move(ratios);

            if (spec.kind == "sumproduct") {
                const auto sp = sumproduct_config(spec.A, spec.Q, spec.d);
                const std::set<std::size_t> v0(sp.v0.begin(), sp.v0.end());
                bool rich = true, once = true;
                for (const auto& line : sp.lines) {
                    rich = rich && line.incident.size() >= spec.Q.size();
                    once = once && std::count_if(line.incident.begin(), line.incident.end(),
                                                 [&](std::size_t i) { return v0.count(i) > 0; }) == 1;
                }
                std::size_t expected = 1;
                for (std::size_t k = 0; k < 2 * spec.d - 2; ++k) expected *= spec.A.size();
                j["family"] = {{"lines", sp.lines.size()}, {"expected", expected}};
                inv["family_count"] = sp.lines.size() == expected;
                inv["family_rich"] = rich;
                inv["family_meets_v0_once"] = once;
            }
            if (cfg.wants("lemma") && !lines.empty() && r >= 2) {
                const LemmaResult lr = lemma_findpoly(V, lines, r, LemmaMode::plain, constants);
                j["lemma"] = to_json(lr.certificate);
                j["lemma_polynomial"] = lr.poly ? to_json(lr.poly->f) : Json(nullptr);
                inv["lemma_product_zero"] = lr.certificate.product_is_zero;
                inv["lemma_rank_bounds"] = lr.certificate.column_bound_holds && lr.certificate.row_bound_holds &&
                                           lr.certificate.rank_sum_ok;
            }
            if (cfg.wants("hyperplane")) {
                const ExtractResult er = extract_hyperplane(V, r, lines, constants);
                j["trace"] = to_json(er.trace);
                if (er.found()) inv["subset_bound"] = er.trace.subset_bound_holds;
            }
            bool all = true;
            for (const auto& [k, v] : inv.items()) all = all && v.get<bool>();
            out.invariants_ok = out.invariants_ok && all;
            j["invariants"] = std::move(inv);
            j["invariants_ok"] = all;
            row.json = std::move(j);
            rows.push_back(std::move(row));
        }
    }

    // Scaling: slope of log |L_r| against log n for each r with two or more sizes.
    Json slopes = Json::array();
    for (std::size_t r : cfg.r_values) {
        std::vector<std::pair<mpq_class, mpq_class>> pts;
        std::set<std::size_t> ns;
        for (const auto& row : rows)
            if (row.r == r && row.bounds.measured.at("lines") > 0 && ns.insert(row.n).second)
                pts.emplace_back(mpq_class(static_cast<unsigned long>(row.n)),
                                 mpq_class(static_cast<unsigned long>(row.bounds.measured.at("lines"))));
        if (pts.size() >= 2) slopes.push_back({{"r", r}, {"slope", decimal(mpq_class(loglog_slope(pts)), 6)}});
    }

    Json report;
    report["config"] = to_json(cfg);
    Json jrows = Json::array();
    for (const auto& row : rows) jrows.push_back(row.json);
    report["rows"] = std::move(jrows);
    report["loglog_slopes"] = std::move(slopes);
    report["invariants_ok"] = out.invariants_ok;
    out.report = std::move(report);

    std::ostringstream csv;
    csv << "id,h,r,n,d,lines,incidences,aps";
    for (const auto& t : kTermNames) csv << "," << csv_quote("term " + t);
    for (const auto& t : kTermNames) csv << "," << csv_quote("ratio " + t);
    csv << ",invariants_ok\n";
    for (const auto& row : rows) {
        const auto& m = row.bounds.measured;
        csv << csv_quote(cfg.id) << "," << row.h << "," << row.r << "," << row.n << "," << row.d << ","
            << m.at("lines") << "," << m.at("incidences") << ",";
        if (m.count("aps")) csv << m.at("aps");
        for (const auto& t : kTermNames) {
            csv << ",";
            if (auto v = find_term(row.bounds.terms, t)) csv << decimal(*v);
        }
        for (const auto& t : kTermNames) {
            csv << ",";
            for (const auto& [name, v] : row.bounds.ratios)
                if (name == t) csv << decimal(v);
        }
        csv << "," << (row.json.at("invariants_ok").get<bool>() ? "true" : "false") << "\n";
    }
    out.csv = csv.str();
    return out;
}

void write_experiment(const ExperimentConfig& cfg, const ExperimentOutput& out) {
    if (!cfg.json_out.empty()) write_json_file(cfg.json_out, out.report);
    if (!cfg.csv_out.empty()) write_text_file(cfg.csv_out, out.csv);
}

}  // namespace richlines
