#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "dann/experiment.hpp"
#include "dann/random.hpp"
#include "dann/shard.hpp"

namespace dann {

/// The six numeric census columns used as features, plus the income label.
struct AdultRecord {
  double age = 0;
  double fnlwgt = 0;
  double education_num = 0;
  double capital_gain = 0;
  double capital_loss = 0;
  double hours_per_week = 0;
  int income_label = 0;  // 1 iff income > 50K
};

struct IngestSummary {
  std::size_t lines = 0;      // non-blank lines seen
  std::size_t retained = 0;
  std::size_t missing = 0;    // dropped: "?" in a used column
  std::size_t malformed = 0;  // dropped: too few fields, bad number, bad label
};

struct AdultData {
  std::vector<AdultRecord> records;
  IngestSummary summary;
};

/// Reads the UCI adult file layout (comma separated, no header). Rows with
/// "?" in any of the seven used columns, or that fail to parse, are dropped
/// and counted. Accepts both ">50K" and the test file's ">50K." spelling.
/// Throws IoError when the file cannot be opened.
AdultData ingest_adult(const std::filesystem::path& path);

/// Unscaled feature shard in record order (d = 6).
Shard records_to_shard(const std::vector<AdultRecord>& records, int shard_id = 1);

/// Per-column min-max parameters fitted on a training set.
struct ScalingParams {
  std::vector<double> min;
  std::vector<double> max;
};

ScalingParams fit_scaling(const Shard& data);

/// (x - min) / (max - min) clamped to [0,1]; constant columns map to 0.
Shard apply_scaling(const Shard& data, const ScalingParams& params);

struct ScaledData {
  Shard shard;
  ScalingParams params;
};

/// Fits the scaling on `records` and applies it. Throws on empty input.
ScaledData scale_features(const std::vector<AdultRecord>& records);

struct DatasetSplit {
  Shard train;
  Shard test;
};

/// Random permutation, then the first ceil(N * (1 - test_fraction)) rows
/// become the training set.
DatasetSplit train_test_split(const Shard& data, double test_fraction, Rng& rng);

/// Test-set misclassification rate of every enabled classifier at every
/// epsilon, with the training set partitioned per cfg.split. A "majority"
/// cell per epsilon reports the error of always predicting the training
/// majority class. cfg.total_size and cfg.dim are taken from the data.
ExperimentResult evaluate_real(const Shard& train, const Shard& test, ExperimentConfig cfg,
                               unsigned threads = 0);

inline constexpr const char* kMajorityName = "majority";

}  // namespace dann
