#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "dann/experiment.hpp"

namespace dann {

inline constexpr const char* kVersion = "1.0.0";

/// Header plus one row per (classifier, epsilon):
/// classifier,epsilon,m,<agreement_rate|error_rate>,mc_stderr,mean_runtime_s,k1_min,k1_med,k1_max
void write_results_csv(std::ostream& out, const ExperimentResult& result);

nlohmann::json config_to_json(const ExperimentConfig& cfg);
/// Parses the keys written by config_to_json; missing keys keep defaults.
ExperimentConfig config_from_json(const nlohmann::json& j);

/// Full result with the generating config embedded.
nlohmann::json results_to_json(const ExperimentResult& result);

/// Provenance record: command, config, seed, thread count, versions.
nlohmann::json run_manifest(const std::string& command, const ExperimentConfig& cfg,
                            unsigned threads);

}  // namespace dann
