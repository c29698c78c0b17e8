#include "dann/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dann {

namespace {

double statistic(std::int64_t ones, std::int64_t total_k) {
  const double eta = static_cast<double>(ones) / static_cast<double>(total_k);
  return std::sqrt(2.0 * static_cast<double>(total_k)) * std::abs(eta - 0.5);
}

}  // namespace

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::ThresholdCrossed:
      return "threshold_crossed";
    case StopReason::BoundReached:
      return "bound_reached";
  }
  return "unknown";
}

void validate_stopping_config(const StoppingConfig& cfg) {
  if (cfg.total_size < 2) throw InvalidInput("total sample size N must be at least 2");
  if (cfg.dim < 1) throw InvalidInput("dimension d must be at least 1");
}

void validate_shard_sizes(std::span<const std::size_t> shard_sizes, const StoppingConfig& cfg) {
  if (shard_sizes.empty()) throw InvalidInput("at least one shard is required");
  std::int64_t total = 0;
  for (std::size_t j = 0; j < shard_sizes.size(); ++j) {
    if (shard_sizes[j] == 0) throw InvalidInput("shard sizes must be positive");
    if (j > 0 && shard_sizes[j] > shard_sizes[j - 1]) {
      throw InvalidInput("shard sizes must be sorted nonincreasing");
    }
    total += static_cast<std::int64_t>(shard_sizes[j]);
  }
  if (total != cfg.total_size) throw InvalidInput("shard sizes do not sum to N");
}

std::size_t k1_bound(std::size_t n1, const StoppingConfig& cfg) {
  validate_stopping_config(cfg);
  if (n1 < 1 || static_cast<std::int64_t>(n1) > cfg.total_size) {
    throw InvalidInput("n1 must lie in [1, N]");
  }
  const double n_total = static_cast<double>(cfg.total_size);
  const double d = cfg.dim;
  double value = static_cast<double>(n1) * std::pow(n_total, -d / (2.0 + d));
  if (cfg.include_log_in_bound) value *= std::log(n_total);
  const auto bound = static_cast<std::size_t>(std::ceil(value));
  return std::max<std::size_t>(bound, 1);
}

std::size_t sub_k(std::size_t k1, std::size_t n1, std::size_t nj) {
  if (n1 == 0 || nj == 0 || k1 == 0) throw InvalidInput("sub_k arguments must be positive");
  const std::size_t k = (k1 * nj + n1 - 1) / n1;
  return std::min(k, nj);
}

double stopping_statistic(const AggregateEstimate& agg) {
  return statistic(agg.ones, agg.total_k);
}

double stopping_threshold(const StoppingConfig& cfg) {
  validate_stopping_config(cfg);
  return std::sqrt((cfg.dim + 2.0) * std::log(static_cast<double>(cfg.total_size)));
}

AggregateEstimate aggregate_at(std::span<const NeighborProfile> profiles,
                               std::span<const std::size_t> shard_sizes, std::size_t k1) {
  if (profiles.size() != shard_sizes.size()) {
    throw InvalidInput("one profile per shard is required");
  }
  std::vector<LocalEstimate> locals;
  locals.reserve(profiles.size());
  for (std::size_t j = 0; j < profiles.size(); ++j) {
    locals.push_back(local_estimate(profiles[j], sub_k(k1, shard_sizes[0], shard_sizes[j])));
  }
  return aggregate(locals);
}

AdaptiveSelection adaptive_select_with_bound(std::span<const NeighborProfile> profiles,
                                             std::span<const std::size_t> shard_sizes,
                                             const StoppingConfig& cfg, std::size_t bound) {
  validate_stopping_config(cfg);
  validate_shard_sizes(shard_sizes, cfg);
  if (profiles.size() != shard_sizes.size()) {
    throw InvalidInput("one profile per shard is required");
  }
  const std::size_t n1 = shard_sizes[0];
  if (bound < 1 || bound > n1) throw InvalidInput("k1 bound must lie in [1, n_1]");
  for (std::size_t j = 0; j < profiles.size(); ++j) {
    if (profiles[j].k_max() < sub_k(bound, n1, shard_sizes[j])) {
      throw InvalidInput("neighbor profile too shallow for the k1 search range");
    }
  }

  const double threshold = stopping_threshold(cfg);
  const std::size_t m = profiles.size();
  std::vector<std::size_t> depth(m, 0);
  std::int64_t ones = 0;
  std::int64_t total_k = 0;

  AdaptiveSelection sel;
  for (std::size_t k1 = 1; k1 <= bound; ++k1) {
    // Depths only grow with k1, so pooled counts are updated incrementally.
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t kj = sub_k(k1, n1, shard_sizes[j]);
      if (kj == depth[j]) continue;
      const std::int64_t before = depth[j] == 0 ? 0 : profiles[j].ones_within(depth[j]);
      ones += profiles[j].ones_within(kj) - before;
      total_k += static_cast<std::int64_t>(kj - depth[j]);
      depth[j] = kj;
    }
    sel.iterations = k1;
    if (statistic(ones, total_k) > threshold) {
      sel.stop_reason = StopReason::ThresholdCrossed;
      break;
    }
    if (k1 == bound) sel.stop_reason = StopReason::BoundReached;
  }

  sel.k1_hat = sel.iterations;
  const AggregateEstimate agg = aggregate_at(profiles, shard_sizes, sel.k1_hat);
  sel.ks_hat = agg.ks;
  sel.eta_hat = agg.eta;
  sel.label = classify(sel.eta_hat);
  return sel;
}

AdaptiveSelection adaptive_select(std::span<const NeighborProfile> profiles,
                                  std::span<const std::size_t> shard_sizes,
                                  const StoppingConfig& cfg) {
  validate_stopping_config(cfg);
  validate_shard_sizes(shard_sizes, cfg);
  // The formula can exceed n_1 for d = 1 and small N; a shard has no deeper neighbors.
  const std::size_t bound = std::min(k1_bound(shard_sizes[0], cfg), shard_sizes[0]);
  return adaptive_select_with_bound(profiles, shard_sizes, cfg, bound);
}

}  // namespace dann
