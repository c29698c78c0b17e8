#include "dann/estimator.hpp"

namespace dann {

LocalEstimate local_estimate(const NeighborProfile& profile, std::size_t k) {
  if (k < 1 || k > profile.k_max()) throw InvalidInput("k must lie in [1, k_max]");
  return {profile.shard_id, k, profile.ones_within(k)};
}

AggregateEstimate aggregate(std::span<const LocalEstimate> estimates) {
  if (estimates.empty()) throw InvalidInput("cannot aggregate an empty list of estimates");
  AggregateEstimate agg;
  agg.ks.reserve(estimates.size());
  for (const auto& e : estimates) {
    if (e.k < 1) throw InvalidInput("every local k must be at least 1");
    agg.ks.push_back(e.k);
    agg.ones += e.ones;
    agg.total_k += static_cast<std::int64_t>(e.k);
  }
  agg.eta = static_cast<double>(agg.ones) / static_cast<double>(agg.total_k);
  return agg;
}

int classify(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw InvalidInput("eta must lie in [0,1]");
  return eta >= 0.5 ? 1 : 0;
}

}  // namespace dann
