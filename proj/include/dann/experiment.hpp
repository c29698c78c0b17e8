#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dann/baselines.hpp"
#include "dann/partition.hpp"

namespace dann {

/// One grid of simulation runs.
struct ExperimentConfig {
  std::size_t total_size = 20000;  // N
  double kappa = 0.60;
  std::vector<double> epsilons = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  SplitMode split = SplitMode::Uniform;
  std::size_t runs = 200;
  std::uint64_t seed = 20240501;
  std::vector<Method> methods = {Method::Dann, Method::DannNes, Method::DnnQiao, Method::D1nn};
  std::size_t queries_per_run = 1;
  bool include_log_in_bound = true;
  std::size_t dim = 3;
};

void validate_config(const ExperimentConfig& cfg);

enum class Metric { BayesAgreement, TestError };

struct K1Summary {
  std::size_t min = 0;
  std::size_t median = 0;  // lower median
  std::size_t max = 0;

  friend bool operator==(const K1Summary&, const K1Summary&) = default;
};

/// Aggregated outcome of one (classifier, epsilon) cell.
struct CellResult {
  std::string classifier;
  double epsilon = 0.0;
  std::size_t m = 0;
  std::size_t runs = 0;       // runs (or test points) that completed
  std::size_t failures = 0;   // runs that raised an error
  double rate = 0.0;          // agreement with Bayes, or test error
  double mc_stderr = 0.0;
  double positive_rate = 0.0; // fraction of predictions equal to 1
  double mean_runtime_s = 0.0;
  std::optional<K1Summary> k1;
};

struct ExperimentResult {
  ExperimentConfig config;
  Metric metric = Metric::BayesAgreement;
  std::vector<CellResult> cells;

  [[nodiscard]] const CellResult& cell(std::string_view classifier, double epsilon) const;
};

/// True when both results agree on every field except runtimes.
bool same_outcomes(const ExperimentResult& a, const ExperimentResult& b);

K1Summary summarize_k1(std::vector<std::size_t> values);

/// Monte-Carlo grid: per run a fresh sample of N points and queries_per_run
/// query points are drawn from the stream (seed, run); for every epsilon the
/// sample is partitioned with the stream (seed, run, epsilon index) and each
/// enabled classifier is timed and compared against the Bayes rule. Runs are
/// spread over `threads` workers; results do not depend on the thread count.
ExperimentResult run_experiment(const ExperimentConfig& cfg, unsigned threads = 0);

}  // namespace dann
