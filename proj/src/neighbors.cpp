#include "dann/neighbors.hpp"

#include <algorithm>
#include <cmath>

namespace dann {

namespace {

struct Candidate {
  double distance;
  std::size_t index;
};

bool closer(const Candidate& a, const Candidate& b) {
  if (a.distance != b.distance) return a.distance < b.distance;
  return a.index < b.index;
}

void check_request(const Shard& shard, std::span<const double> query, std::size_t k_max) {
  if (query.size() != shard.dim()) throw InvalidInput("query dimension does not match shard");
  if (k_max < 1 || k_max > shard.size()) {
    throw InvalidInput("k_max must lie in [1, shard size]");
  }
}

}  // namespace

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InvalidInput("distance between vectors of different length");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

NeighborProfile neighbor_profile(const Shard& shard, std::span<const double> query,
                                 std::size_t k_max) {
  check_request(shard, query, k_max);

  std::vector<Candidate> candidates(shard.size());
  for (std::size_t i = 0; i < shard.size(); ++i) {
    candidates[i] = {euclidean_distance(shard.features(i), query), i};
  }
  const auto kth = candidates.begin() + static_cast<std::ptrdiff_t>(k_max);
  if (k_max < candidates.size()) {
    std::nth_element(candidates.begin(), kth - 1, candidates.end(), closer);
  }
  std::sort(candidates.begin(), kth, closer);

  NeighborProfile profile;
  profile.shard_id = shard.id();
  profile.prefix_sums.resize(k_max);
  profile.distances.resize(k_max);
  std::int64_t running = 0;
  for (std::size_t i = 0; i < k_max; ++i) {
    running += shard.label(candidates[i].index);
    profile.prefix_sums[i] = running;
    profile.distances[i] = candidates[i].distance;
  }
  return profile;
}

}  // namespace dann
