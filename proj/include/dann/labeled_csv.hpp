#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dann/shard.hpp"

namespace dann {

/// Comma-separated table with a header row.
struct LabeledTable {
  std::vector<std::string> feature_names;
  std::vector<double> features;  // row-major
  std::vector<int> labels;       // empty when the file had no label column
  std::size_t rows = 0;
};

/// Reads a table whose header names the feature columns and (optionally)
/// `label_column`. When `feature_order` is nonempty the features are
/// returned in that column order and every name must be present.
LabeledTable read_labeled_csv(const std::filesystem::path& path, const std::string& label_column,
                              const std::vector<std::string>& feature_order = {});

/// Shard from a table that carries labels.
Shard to_shard(const LabeledTable& table, int shard_id);

}  // namespace dann
