#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hardylab/numeric.hpp"

namespace hardylab {

/// A named reproduction run: which experiment, where to write, and numeric
/// knobs.  Round-trips losslessly through the config text format.
struct ExperimentConfig {
    std::string experiment;
    std::string out_csv;
    std::string out_json;
    std::uint64_t seed = 1;
    int workers = 0; ///< 0 = HARDYLAB_WORKERS or hardware concurrency
    double rel_tol = 1e-9;
    std::map<std::string, double> overrides;

    bool operator==(const ExperimentConfig&) const = default;
};

/// Config text: [experiment] table with key = value lines, plus an optional
/// [overrides] table of numeric knobs.  '#' starts a comment.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);
std::string serialize_config(const ExperimentConfig& cfg);

struct ResultRow {
    std::string experiment_id;
    std::string registry_id;
    std::string domain;
    std::string family;
    std::string params; ///< flattened name=value pairs, ';'-separated
    std::optional<double> lhs, rhs, margin, quadrature_error;
    std::optional<double> target, fitted_limit, fit_residual;
    bool pass = true;
};

struct ExperimentOutcome {
    std::string experiment;
    std::uint64_t seed = 1;
    std::vector<ResultRow> rows;
    int checks = 0;
    int failures = 0;
    bool pass = true;
    std::string csv_path, json_path;
};

const std::vector<std::string>& experiment_ids();

/// Run one experiment; writes CSV/JSON when paths are configured.
ExperimentOutcome run_experiment(const ExperimentConfig& cfg);

std::string csv_to_string(const std::vector<ResultRow>& rows);
void write_csv(const std::string& path, const std::vector<ResultRow>& rows);
void write_json_summary(const std::string& path, const ExperimentOutcome& out);

} // namespace hardylab
