#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dann/neighbors.hpp"

namespace dann {

/// Fraction of 1-labels among the k nearest points of one shard.
struct LocalEstimate {
  int shard_id = 0;
  std::size_t k = 0;
  std::int64_t ones = 0;

  [[nodiscard]] double eta() const { return static_cast<double>(ones) / static_cast<double>(k); }
};

/// k-weighted combination of local estimates. Held as pooled integer
/// counts; `eta` is the single division ones / total_k.
struct AggregateEstimate {
  std::vector<std::size_t> ks;
  std::int64_t ones = 0;
  std::int64_t total_k = 0;
  double eta = 0.0;
};

LocalEstimate local_estimate(const NeighborProfile& profile, std::size_t k);

/// Throws InvalidInput on an empty list or a zero k.
AggregateEstimate aggregate(std::span<const LocalEstimate> estimates);

/// Plug-in rule: 1 iff eta >= 1/2. Throws InvalidInput when eta is not in [0,1].
int classify(double eta);

}  // namespace dann
