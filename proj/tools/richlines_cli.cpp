// richlines: command-line front end.
//
// Exit status: 0 when every asserted invariant holds, 1 on a violation,
// 2 on a usage or input error.

#include "richlines/configurations.hpp"
#include "richlines/experiment.hpp"
#include "richlines/incidence.hpp"
#include "richlines/json_io.hpp"
#include "richlines/pipeline.hpp"
#include "richlines/suites.hpp"
#include "richlines/vanishing.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

using namespace richlines;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void emit(const Json& j, const std::string& path) {
    if (path.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(path, j);
}

Vec parse_scalars(const std::vector<std::string>& items) {
    Vec v;
    for (const auto& s : items) v.push_back(Scalar::parse(s));
    return v;
}

PointSet load_points(const std::string& path) { return point_set_from_json(read_json_file(path)); }

struct GenOptions {
    GeneratorSpec spec;
    std::vector<std::string> A, Q;
    std::string out;
};

struct InputOptions {
    std::string in;
    std::size_t r = 3;
    std::string out;
};

struct VanishOptions {
    std::string in;
    std::size_t r = 4;
    std::string mode = "lemma31";
    std::string trace;
    std::string out;
};

struct HyperplaneOptions {
    std::string in;
    std::size_t r = 4;
    std::size_t ap_l = 0;
    std::string trace;
    std::string out;
};

int cmd_gen(GenOptions& o) {
    o.spec.A = parse_scalars(o.A);
    o.spec.Q = parse_scalars(o.Q);
    if (o.spec.kind == "sumproduct") {
        const auto cfg = sumproduct_config(o.spec.A, o.spec.Q, o.spec.d);
        Json j = to_json(cfg.points);
        j["lines"] = to_json(cfg.lines);
        j["v0"] = cfg.v0;
        emit(j, o.out);
    } else {
        emit(to_json(generate(o.spec)), o.out);
    }
    return kOk;
}

int cmd_richlines(const InputOptions& o) {
    const PointSet V = load_points(o.in);
    const auto lines = rich_lines(V, o.r);
    const IncidenceGraph I = incidences(V, lines);
    Json j;
    j["r"] = o.r;
    j["n"] = V.size();
    j["count"] = lines.size();
    j["incidences"] = I.size();
    j["lines"] = to_json(lines);
    if (o.out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        write_json_file(o.out, j);
        std::cout << lines.size() << " lines with at least " << o.r << " points, " << I.size() << " incidences\n";
    }
    return I.size() >= o.r * lines.size() ? kOk : kViolation;
}

int cmd_apcount(const InputOptions& o) {
    const PointSet V = load_points(o.in);
    const APCount aps = count_aps(V, o.r, !o.out.empty());
    Json j;
    j["r"] = o.r;
    j["n"] = V.size();
    j["convention"] = "unordered, sign-canonical difference";
    j["count"] = aps.count;
    if (!o.out.empty()) {
        Json recs = Json::array();
        for (const auto& ap : aps.progressions)
            recs.push_back({{"start", to_json(ap.start)}, {"diff", to_json(ap.diff)}, {"points", ap.members}});
        j["progressions"] = std::move(recs);
        write_json_file(o.out, j);
        std::cout << aps.count << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return kOk;
}

int cmd_vanish(const VanishOptions& o) {
    const PointSet V = load_points(o.in);
    if (o.r < 2) throw UsageError("--r must be at least 2");
    const Constants constants = Constants::defaults(V.dim());
    Json j;
    j["r"] = o.r;
    j["n"] = V.size();
    j["mode"] = o.mode;
    std::optional<VanishingPoly> poly;
    bool ok = true;
    if (o.mode == "minimal") {
        poly = find_vanishing_poly(V, o.r - 2);
    } else {
        const LemmaMode mode = o.mode == "bounded" ? LemmaMode::bounded : LemmaMode::plain;
        const LemmaResult lr = lemma_findpoly(V, o.r, mode, constants);
        poly = lr.poly;
        const auto& c = lr.certificate;
        ok = c.product_is_zero && c.column_bound_holds && c.row_bound_holds && c.rank_sum_ok &&
             c.max_pair_multiplicity <= 2 && c.params.t <= 2 && c.params.q <= o.r;
        j["certificate"] = to_json(c);
        if (!o.trace.empty()) {
            const Assembly as = assemble(V, rich_lines(V, o.r), o.r);
            Json t;
            t["certificate"] = to_json(c);
            t["design_matrix"] = to_json(as.A);
            t["polynomial"] = poly ? to_json(poly->f) : Json(nullptr);
            write_json_file(o.trace, t);
        }
    }
    if (poly) {
        j["degree"] = poly->degree;
        j["kernel_dim"] = poly->kernel_dim;
        j["polynomial"] = to_json(poly->f);
        j["readable"] = to_string(poly->f);
    } else {
        j["polynomial"] = nullptr;
    }
    if (!o.out.empty() && poly) write_json_file(o.out, to_json(poly->f));
    std::cout << j.dump(2) << "\n";
    return ok ? kOk : kViolation;
}

int cmd_hyperplane(const HyperplaneOptions& o) {
    const PointSet V = load_points(o.in);
    Json j;
    j["r"] = o.r;
    j["n"] = V.size();
    bool ok = false;
    if (o.ap_l > 0) {
        const APHyperplaneResult ar = ap_hyperplane(V, o.r, o.ap_l, Constants::defaults(1 + V.dim() * o.ap_l));
        j["l"] = o.ap_l;
        j["progressions"] = ar.progressions;
        j["lifting_injective"] = ar.lifting_injective;
        j["found"] = ar.found;
        if (!o.trace.empty()) write_json_file(o.trace, to_json(ar.lifted.trace));
        if (ar.found) {
            j["slice"] = ar.slice;
            j["hyperplane"] = to_json(ar.projection->hyperplane);
            j["subset"] = ar.projection->subset;
            j["density"] = to_json(ar.projection->delta);
            ok = ar.lifting_injective && ar.not_a_slice && ar.projection->density_ok &&
                 ar.projection->correspondence_ok;
        }
    } else {
        const ExtractResult er = extract_hyperplane(V, o.r, Constants::defaults(V.dim()));
        j["status"] = std::string(status_name(er.status));
        if (!o.trace.empty()) write_json_file(o.trace, to_json(er.trace));
        if (er.found()) {
            j["hyperplane"] = to_json(*er.hyperplane);
            j["subset"] = er.subset;
            j["subset_size"] = er.subset.size();
            j["subset_bound"] = to_json(er.trace.subset_bound);
            ok = er.trace.subset_bound_holds && er.trace.joints_have_zero_gradient;
        }
    }
    emit(j, o.out);
    return ok ? kOk : kViolation;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& out) {
    std::vector<SuiteReport> reports;
    if (suite == "claims" || suite == "all") reports.push_back(run_claims_suite(seed));
    if (suite == "bounds" || suite == "all") reports.push_back(run_bounds_suite(seed));
    bool ok = true;
    Json j = Json::array();
    for (const auto& rep : reports) {
        for (const auto& c : rep.checks)
            std::cout << (c.passed ? "PASS " : "FAIL ") << rep.suite << "/" << c.name << "  " << c.detail << "\n";
        ok = ok && rep.passed();
        j.push_back(to_json(rep));
    }
    if (!out.empty()) write_json_file(out, j);
    return ok ? kOk : kViolation;
}

int cmd_sweep(const std::string& config_path) {
    const ExperimentConfig cfg = parse_experiment_config(read_json_file(config_path));
    const ExperimentOutput out = run_experiment(cfg);
    write_experiment(cfg, out);
    if (cfg.json_out.empty()) std::cout << out.report.dump(2) << "\n";
    if (cfg.csv_out.empty()) std::cout << out.csv;
    return out.invariants_ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rich lines, Veronese certificates and hyperplane extraction over Q and Q(i)"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    GenOptions gen;
    auto* g = app.add_subcommand("gen", "Generate a point configuration");
    g->add_option("--kind", gen.spec.kind, "grid | pasted | power | sumproduct | random")
        ->check(CLI::IsMember({"grid", "pasted", "power", "sumproduct", "random"}))
        ->required();
    g->add_option("--d", gen.spec.d, "Dimension");
    g->add_option("--h", gen.spec.h, "Grid side");
    g->add_option("--l", gen.spec.l, "Flat dimension (pasted) or exponent (power)");
    g->add_option("--copies", gen.spec.copies, "Number of pasted copies");
    g->add_option("--A", gen.A, "Base set for sumproduct")->delimiter(',');
    g->add_option("--Q", gen.Q, "Dilation set for sumproduct (must contain 0)")->delimiter(',');
    g->add_option("--n", gen.spec.n, "Point count (random)");
    g->add_option("--range", gen.spec.coord_range, "Coordinate range (random)");
    g->add_option("--seed", gen.spec.seed, "Seed (random)");
    g->add_option("--base-d", gen.spec.base_d, "Factor grid dimension (power)");
    g->add_option("--out", gen.out, "Output file (default stdout)");

    InputOptions rl;
    auto* r = app.add_subcommand("richlines", "Enumerate r-rich lines");
    r->add_option("--in", rl.in, "Point set JSON")->required();
    r->add_option("--r", rl.r, "Richness threshold")->check(CLI::Range(2, 1 << 20));
    r->add_option("--out", rl.out, "Line JSON output");

    InputOptions ap;
    auto* a = app.add_subcommand("apcount", "Count r-term arithmetic progressions");
    a->add_option("--in", ap.in, "Point set JSON")->required();
    a->add_option("--r", ap.r, "Progression length")->check(CLI::Range(2, 1 << 20));
    a->add_option("--out", ap.out, "Write the progressions to this file");

    VanishOptions va;
    auto* v = app.add_subcommand("vanish", "Find a low-degree polynomial vanishing on the points");
    v->add_option("--in", va.in, "Point set JSON")->required();
    v->add_option("--r", va.r, "Richness threshold; the degree bound is r - 2");
    v->add_option("--mode", va.mode, "lemma31 | bounded | minimal")
        ->check(CLI::IsMember({"lemma31", "bounded", "minimal"}));
    v->add_option("--trace", va.trace, "Certificate and design matrix JSON");
    v->add_option("--out", va.out, "Polynomial JSON output");

    HyperplaneOptions hp;
    auto* h = app.add_subcommand("hyperplane", "Extract a hyperplane holding many points");
    h->add_option("--in", hp.in, "Point set JSON")->required();
    h->add_option("--r", hp.r, "Richness threshold")->check(CLI::Range(2, 1 << 20));
    h->add_option("--ap", hp.ap_l, "Use r-term progressions of V^l instead of rich lines");
    h->add_option("--trace", hp.trace, "Pipeline trace JSON");
    h->add_option("--out", hp.out, "Result JSON (default stdout)");

    std::string suite = "all";
    std::uint64_t seed = 1;
    std::string verify_out;
    auto* ver = app.add_subcommand("verify", "Run the property suites");
    ver->add_option("--suite", suite, "claims | bounds | all")->check(CLI::IsMember({"claims", "bounds", "all"}));
    ver->add_option("--seed", seed, "Seed");
    ver->add_option("--out", verify_out, "JSON report");

    std::string config;
    auto* sw = app.add_subcommand("sweep", "Run an experiment sweep");
    sw->add_option("--config", config, "Experiment config JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*g) return cmd_gen(gen);
        if (*r) return cmd_richlines(rl);
        if (*a) return cmd_apcount(ap);
        if (*v) return cmd_vanish(va);
        if (*h) return cmd_hyperplane(hp);
        if (*ver) return cmd_verify(suite, seed, verify_out);
        if (*sw) return cmd_sweep(config);
    } catch (const std::logic_error& e) {
        // Broken internal invariants are violations; bad arguments are usage errors.
        const bool usage = dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e) ||
                           dynamic_cast<const std::domain_error*>(&e) || dynamic_cast<const std::length_error*>(&e);
        std::cerr << "richlines: " << e.what() << "\n";
        return usage ? kUsage : kViolation;
    } catch (const std::exception& e) {
        std::cerr << "richlines: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
