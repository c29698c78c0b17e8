#include "dann/oracle.hpp"

#include <algorithm>
#include <utility>

namespace dann::oracle {

NeighborProfile brute_force_profile(const Shard& shard, std::span<const double> query,
                                    std::size_t k_max) {
  if (query.size() != shard.dim()) throw InvalidInput("query dimension does not match shard");
  if (k_max < 1 || k_max > shard.size()) throw InvalidInput("k_max must lie in [1, shard size]");

  std::vector<std::pair<double, int>> all;
  all.reserve(shard.size());
  for (std::size_t i = 0; i < shard.size(); ++i) {
    all.emplace_back(euclidean_distance(shard.features(i), query), shard.label(i));
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  NeighborProfile profile;
  profile.shard_id = shard.id();
  std::int64_t running = 0;
  for (std::size_t i = 0; i < k_max; ++i) {
    running += all[i].second;
    profile.prefix_sums.push_back(running);
    profile.distances.push_back(all[i].first);
  }
  return profile;
}

}  // namespace dann::oracle
