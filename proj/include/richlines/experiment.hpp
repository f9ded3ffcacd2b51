#pragma once

#include "richlines/configurations.hpp"
#include "richlines/json_io.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace richlines {

/*
 * A sweep over generator sizes h and richness thresholds r.
 *
 *   {
 *     "id": "grid-sweep",
 *     "generator": {"kind": "grid", "d": 2, "h": 5},
 *     "h": [5, 10, 15],
 *     "r": [3, 4, 5],
 *     "pipelines": ["apcount", "flats", "hyperplane", "lemma"],
 *     "constants": {"C_d": "19683/1", "C_prime_d": "19683/2048"},
 *     "output": {"json": "report.json", "csv": "report.csv"},
 *     "seed": 1
 *   }
 *
 * Rich lines and incidences are always measured; the listed pipelines add
 * progression counts, flat statistics s_l, hyperplane extraction traces and
 * design-matrix certificates.
 */
struct ExperimentConfig {
    std::string id = "experiment";
    GeneratorSpec generator;
    std::vector<std::size_t> h_values;
    std::vector<std::size_t> r_values;
    std::vector<std::string> pipelines;
    std::optional<mpq_class> C;
    std::optional<mpq_class> C_prime;
    std::string json_out;
    std::string csv_out;
    std::uint64_t seed = 1;

    bool wants(const std::string& pipeline) const;
};

/// Throws FormatError for missing or ill-typed fields.
ExperimentConfig parse_experiment_config(const Json& j);
Json to_json(const ExperimentConfig& cfg);
GeneratorSpec generator_from_json(const Json& j);
Json to_json(const GeneratorSpec& spec);

struct ExperimentOutput {
    Json report;       // exact values; the source of truth
    std::string csv;   // decimal renderings
    bool invariants_ok = true;
};

/// Deterministic for a fixed config: the same config yields byte-identical output.
ExperimentOutput run_experiment(const ExperimentConfig& cfg);

/// Writes the JSON and CSV outputs named in the config (skipping empty paths).
void write_experiment(const ExperimentConfig& cfg, const ExperimentOutput& out);

}  // namespace richlines
