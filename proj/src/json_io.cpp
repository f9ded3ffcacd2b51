#include "richlines/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace richlines {

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Json to_json(const Vec& v) {
    Json arr = Json::array();
    for (const auto& s : v) arr.push_back(to_json(s));
    return arr;
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (!j.is_string()) throw FormatError("scalar must be a string \"p/q\" or \"p/q+r/s*i\"");
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("expected an array of scalars");
    Vec v;
    for (const auto& e : j) v.push_back(scalar_from_json(e));
    return v;
}

Json to_json(const PointSet& V) {
    Json pts = Json::array();
    for (const auto& p : V) pts.push_back(to_json(p));
    Json j;
    j["dim"] = V.dim();
    j["field"] = std::string(field_tag(V.field()));
    j["points"] = std::move(pts);
    return j;
}

PointSet point_set_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
        throw FormatError("point set needs \"dim\" and \"points\"");
    const auto dim = j.at("dim").get<std::size_t>();
    PointSet V(dim);
    for (const auto& p : j.at("points")) {
        Vec v = vec_from_json(p);
        try {
            V.add(std::move(v));
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
    }
    if (j.contains("field")) {
        const Field declared = parse_field_tag(j.at("field").get<std::string>());
        if (declared == Field::rational && V.field() == Field::gaussian)
            throw FormatError("field \"Q\" declared but a coordinate is not real");
    }
    return V;
}

Json to_json(const Line& line) {
    Json j;
    j["dir"] = to_json(line.dir);
    j["base"] = to_json(line.base);
    j["points"] = line.incident;
    return j;
}

Line line_from_json(const Json& j) {
    Line line;
    line.dir = vec_from_json(j.at("dir"));
    line.base = vec_from_json(j.at("base"));
    if (j.contains("points")) line.incident = j.at("points").get<std::vector<std::size_t>>();
    return line;
}

Json to_json(const std::vector<Line>& lines) {
    Json arr = Json::array();
    for (const auto& l : lines) arr.push_back(to_json(l));
    return arr;
}

std::vector<Line> lines_from_json(const Json& j) {
    const Json& arr = j.is_object() && j.contains("lines") ? j.at("lines") : j;
    std::vector<Line> out;
    for (const auto& e : arr) out.push_back(line_from_json(e));
    return out;
}

Json to_json(const Polynomial& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) {
        Json t;
        t["exp"] = e;
        t["coef"] = to_json(c);
        terms.push_back(std::move(t));
    }
    Json j;
    j["dim"] = f.dim();
    j["terms"] = std::move(terms);
    return j;
}

Polynomial polynomial_from_json(const Json& j) {
    Polynomial f(j.at("dim").get<std::size_t>());
    for (const auto& t : j.at("terms")) f.add_term(t.at("exp").get<Exponent>(), scalar_from_json(t.at("coef")));
    return f;
}

Json to_json(const DesignParameters& p) {
    Json j;
    j["q"] = p.q;
    j["k"] = p.k;
    j["t"] = p.t;
    return j;
}

Json to_json(const DesignMatrix& A) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < A.rows.size(); ++i)
        for (const auto& [c, v] : A.rows[i]) entries.push_back(Json::array({i, c, v.str()}));
    Json j;
    j["rows"] = A.rows.size();
    j["cols"] = A.cols;
    j["params"] = to_json(A.params);
    j["entries"] = std::move(entries);
    j["tuples"] = A.cover.tuples;
    j["tuple_lines"] = A.cover.line_of;
    return j;
}

Json to_json(const Hyperplane& h) {
    Json j;
    j["normal"] = to_json(h.normal);
    j["offset"] = to_json(h.offset);
    return j;
}

Json to_json(const RefinementResult& R) {
    Json removals = Json::array();
    for (const auto& r : R.removals)
        removals.push_back({{"side", r.left_side ? "left" : "right"}, {"vertex", r.vertex}, {"degree", r.degree}});
    Json j;
    j["left_threshold"] = to_json(R.left_threshold);
    j["right_threshold"] = to_json(R.right_threshold);
    j["edges_before"] = R.original.edges.size();
    j["edges_after"] = R.edges.size();
    j["left"] = R.left;
    j["right"] = R.right;
    j["removals"] = std::move(removals);
    return j;
}

Json to_json(const LemmaCertificate& c) {
    Json j;
    j["n"] = c.n;
    j["d"] = c.d;
    j["r"] = c.r;
    j["lines"] = c.line_count;
    j["min_lines_per_point"] = c.min_lines_per_point;
    j["max_lines_per_point"] = c.max_lines_per_point;
    j["required_k"] = to_json(c.required_k);
    j["hypothesis_ok"] = c.hypothesis_ok;
    j["warnings"] = c.warnings;
    j["tuples"] = c.tuples;
    j["params"] = to_json(c.params);
    j["max_pair_multiplicity"] = c.max_pair_multiplicity;
    j["product_is_zero"] = c.product_is_zero;
    j["rank_A"] = c.rank_a;
    j["rank_M"] = c.rank_m;
    j["monomials"] = c.monomials;
    j["column_bound"] = to_json(c.column_bound);
    j["row_bound"] = to_json(c.row_bound);
    j["bounds_vacuous"] = c.bounds_vacuous;
    j["column_bound_holds"] = c.column_bound_holds;
    j["row_bound_holds"] = c.row_bound_holds;
    j["rank_sum_ok"] = c.rank_sum_ok;
    j["deficient"] = c.deficient;
    return j;
}

Json to_json(const PipelineTrace& t) {
    Json j;
    j["status"] = std::string(status_name(t.status));
    j["n"] = t.n;
    j["d"] = t.d;
    j["r"] = t.r;
    j["constants"] = {{"K_d", to_json(t.constants.K)}, {"C_d", to_json(t.constants.C)},
                      {"C_prime_d", to_json(t.constants.C_prime)}};
    j["lines"] = t.line_count;
    j["alpha"] = to_json(t.alpha);
    j["theorem_hypothesis"] = t.theorem_hypothesis;
    j["theorem_target"] = to_json(t.theorem_target);
    j["incidences"] = t.incidences;
    j["k"] = to_json(t.k);
    j["refined"] = {{"points", t.refined_points}, {"lines", t.refined_lines},
                    {"incidences", t.refined_incidences}, {"ok", t.first_refine_ok}};
    Json groups = Json::array();
    for (const auto& g : t.groups)
        groups.push_back({{"j", g.j}, {"points", g.points.size()}, {"incidences", g.incidences}});
    j["dyadic"] = {{"groups", std::move(groups)}, {"j", t.j}, {"group_incidences", t.group_incidences},
                   {"witness", t.dyadic_witness}, {"fallback", t.dyadic_fallback}};
    j["r0"] = to_json(t.r0);
    j["r0_used"] = t.r0_used;
    j["r0_clamped"] = t.r0_clamped;
    j["k0"] = to_json(t.k0);
    j["second_refine"] = {{"points", t.final_points}, {"lines", t.final_lines},
                          {"incidences", t.final_incidences}, {"ok", t.second_refine_ok}};
    j["lemma"] = t.lemma ? to_json(*t.lemma) : Json(nullptr);
    j["polynomial"] = t.f ? to_json(*t.f) : Json(nullptr);
    j["polynomial_degree"] = t.f_degree;
    j["vanishing_lines"] = t.vanishing_lines;
    j["flat_points"] = t.flat_points;
    j["joints"] = t.joints;
    j["joints_have_zero_gradient"] = t.joints_have_zero_gradient;
    j["flat_point"] = t.flat_point ? Json(*t.flat_point) : Json(nullptr);
    j["hyperplane"] = t.hyperplane ? to_json(*t.hyperplane) : Json(nullptr);
    j["subset_size"] = t.subset_size;
    j["subset_bound"] = to_json(t.subset_bound);
    j["subset_bound_holds"] = t.subset_bound_holds;
    j["warnings"] = t.warnings;
    return j;
}

std::string decimal(const mpq_class& q, int digits) {
    // mpf keeps enough bits for 12 significant digits of any rational we emit.
    mpf_class f(q, 256);
    const double asd = f.get_d();
    if (std::isfinite(asd) && std::fabs(asd) < 1e300 && std::fabs(asd) > 1e-300) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", digits, asd);
        return buf;
    }
    if (sgn(q) == 0) return "0";
    mp_exp_t exp;
    std::string m = f.get_str(exp, 10, static_cast<std::size_t>(digits));
    const bool neg = !m.empty() && m[0] == '-';
    if (neg) m.erase(0, 1);
    std::string out = neg ? "-" : "";
    out += m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(exp - 1);
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) { write_text_file(path, j.dump(2) + "\n"); }

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace richlines
