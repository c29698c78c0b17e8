#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dann/shard.hpp"

namespace dann {

/// Labels of the k_max nearest points of one shard to a query, kept as
/// running counts of 1-labels. Position i (0-based) describes neighbor i+1.
struct NeighborProfile {
  int shard_id = 0;
  std::vector<std::int64_t> prefix_sums;
  std::vector<double> distances;

  [[nodiscard]] std::size_t k_max() const { return prefix_sums.size(); }

  /// Number of 1-labels among the k nearest neighbors (1 <= k <= k_max).
  [[nodiscard]] std::int64_t ones_within(std::size_t k) const { return prefix_sums[k - 1]; }

  friend bool operator==(const NeighborProfile&, const NeighborProfile&) = default;
};

/// Euclidean distance. Throws InvalidInput on a dimension mismatch.
double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// Exact k_max nearest neighbors of `query` within `shard`.
///
/// Ties on distance are broken by ascending point index, so the output is
/// identical to a stable sort of all distances. Uses partial selection over
/// the full distance array followed by a sort of the selected prefix.
NeighborProfile neighbor_profile(const Shard& shard, std::span<const double> query,
                                 std::size_t k_max);

}  // namespace dann
