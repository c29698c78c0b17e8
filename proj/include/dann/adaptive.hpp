#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dann/estimator.hpp"
#include "dann/neighbors.hpp"

namespace dann {

struct StoppingConfig {
  std::int64_t total_size = 0;  // N = sum of shard sizes
  int dim = 0;                  // d
  bool include_log_in_bound = true;
};

enum class StopReason { ThresholdCrossed, BoundReached };

std::string_view to_string(StopReason reason);

/// Outcome of the adaptive search over k1.
struct AdaptiveSelection {
  std::size_t k1_hat = 0;
  std::vector<std::size_t> ks_hat;
  double eta_hat = 0.0;
  int label = 0;
  StopReason stop_reason = StopReason::BoundReached;
  std::size_t iterations = 0;
};

/// Largest k1 the search will visit: ceil(n1 * N^(-d/(2+d)) * ln N), with the
/// ln N factor dropped when cfg.include_log_in_bound is false. Never below 1.
std::size_t k1_bound(std::size_t n1, const StoppingConfig& cfg);

/// min(ceil(k1 * nj / n1), nj), in exact integer arithmetic.
std::size_t sub_k(std::size_t k1, std::size_t n1, std::size_t nj);

/// sqrt(2 * total_k) * |eta - 1/2|
double stopping_statistic(const AggregateEstimate& agg);

/// sqrt((d + 2) * ln N)
double stopping_threshold(const StoppingConfig& cfg);

/// Scans k1 = 1, 2, ... with every other shard's depth slaved to k1 and stops
/// at the first k1 whose statistic strictly exceeds the threshold, or at
/// k1_bound(n_1). `shard_sizes` must be sorted nonincreasing and sum to N;
/// profile j must be at least sub_k(k1_bound, n_1, n_j) deep.
AdaptiveSelection adaptive_select(std::span<const NeighborProfile> profiles,
                                  std::span<const std::size_t> shard_sizes,
                                  const StoppingConfig& cfg);

/// The same scan with an explicit upper bound on k1 (1 <= bound <= n_1).
AdaptiveSelection adaptive_select_with_bound(std::span<const NeighborProfile> profiles,
                                             std::span<const std::size_t> shard_sizes,
                                             const StoppingConfig& cfg, std::size_t bound);

/// Aggregate estimate of the profiles at depths sub_k(k1, n_1, n_j).
AggregateEstimate aggregate_at(std::span<const NeighborProfile> profiles,
                               std::span<const std::size_t> shard_sizes, std::size_t k1);

void validate_stopping_config(const StoppingConfig& cfg);

/// Throws InvalidInput unless sizes are nonempty, positive, nonincreasing and
/// sum to cfg.total_size.
void validate_shard_sizes(std::span<const std::size_t> shard_sizes, const StoppingConfig& cfg);

}  // namespace dann
