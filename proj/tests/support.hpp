#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "dann/neighbors.hpp"
#include "dann/shard.hpp"

namespace dann::testing {

/// Random shard of `n` points in [0,1]^dim. With `grid` > 0 coordinates are
/// snapped to multiples of 1/grid so equal distances occur often.
inline Shard random_shard(std::mt19937_64& gen, std::size_t n, std::size_t dim, int id = 1,
                          int grid = 0, double p_one = 0.5) {
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::uniform_int_distribution<int> cell(0, grid > 0 ? grid : 1);
  std::bernoulli_distribution label(p_one);
  std::vector<double> features(n * dim);
  std::vector<std::uint8_t> labels(n);
  for (auto& v : features) v = grid > 0 ? static_cast<double>(cell(gen)) / grid : coord(gen);
  for (auto& y : labels) y = label(gen) ? 1 : 0;
  return Shard(id, dim, std::move(features), std::move(labels));
}

inline std::vector<double> random_query(std::mt19937_64& gen, std::size_t dim, int grid = 0) {
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::uniform_int_distribution<int> cell(0, grid > 0 ? grid : 1);
  std::vector<double> q(dim);
  for (auto& v : q) v = grid > 0 ? static_cast<double>(cell(gen)) / grid : coord(gen);
  return q;
}

/// Profile built straight from a label sequence (neighbor i has labels[i]).
inline NeighborProfile profile_from_labels(const std::vector<int>& labels, int shard_id = 1) {
  NeighborProfile p;
  p.shard_id = shard_id;
  std::int64_t running = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    running += labels[i];
    p.prefix_sums.push_back(running);
    p.distances.push_back(static_cast<double>(i));
  }
  return p;
}

}  // namespace dann::testing
