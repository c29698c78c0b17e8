#include "dann/partition.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <string>

namespace dann {

namespace {

std::vector<std::size_t> largest_remainder(std::size_t total, std::size_t m) {
  // Weight of block j (0-based, largest first) is m - j; weights sum to m(m+1)/2.
  const std::size_t weight_sum = m * (m + 1) / 2;
  std::vector<std::size_t> sizes(m);
  std::vector<std::size_t> remainders(m);
  std::size_t assigned = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t scaled = total * (m - j);
    sizes[j] = scaled / weight_sum;
    remainders[j] = scaled % weight_sum;
    assigned += sizes[j];
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  // Ties in the remainder favor the larger block.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
  for (std::size_t i = 0; assigned < total; ++i, ++assigned) ++sizes[order[i]];
  return sizes;
}

std::vector<Shard> cut_blocks(const Shard& data, const std::vector<std::size_t>& sizes, Rng& rng) {
  std::vector<std::size_t> rows(data.size());
  std::iota(rows.begin(), rows.end(), 0);
  std::shuffle(rows.begin(), rows.end(), rng);
  std::vector<Shard> shards;
  shards.reserve(sizes.size());
  std::size_t offset = 0;
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    std::span<const std::size_t> block(rows.data() + offset, sizes[j]);
    shards.push_back(data.subset(static_cast<int>(j + 1), block));
    offset += sizes[j];
  }
  return shards;
}

void check_count(std::size_t total, std::size_t m) {
  if (m < 1 || m > total) throw InvalidInput("shard count must lie in [1, N]");
}

}  // namespace

std::string_view to_string(SplitMode mode) {
  return mode == SplitMode::Uniform ? "uniform" : "proportional";
}

SplitMode parse_split_mode(std::string_view name) {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lowered == "uniform") return SplitMode::Uniform;
  if (lowered == "proportional") return SplitMode::Proportional;
  throw InvalidInput("unknown split mode '" + std::string(name) + "'");
}

std::size_t shard_count(std::size_t total, double epsilon) {
  if (total < 1) throw InvalidInput("sample size must be positive");
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw InvalidInput("epsilon must lie in [0,1)");
  const auto m = static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(total), epsilon)));
  return std::clamp<std::size_t>(m, 1, total);
}

std::vector<std::size_t> uniform_sizes(std::size_t total, std::size_t m) {
  check_count(total, m);
  std::vector<std::size_t> sizes(m, total / m);
  for (std::size_t j = 0; j < total % m; ++j) ++sizes[j];
  return sizes;
}

std::vector<std::size_t> proportional_sizes(std::size_t total, std::size_t m) {
  check_count(total, m);
  auto sizes = largest_remainder(total, m);
  if (sizes.back() == 0) {
    sizes = largest_remainder(total - m, m);
    for (auto& s : sizes) ++s;
  }
  return sizes;
}

std::vector<Shard> partition_uniform(const Shard& data, std::size_t m, Rng& rng) {
  return cut_blocks(data, uniform_sizes(data.size(), m), rng);
}

std::vector<Shard> partition_proportional(const Shard& data, std::size_t m, Rng& rng) {
  return cut_blocks(data, proportional_sizes(data.size(), m), rng);
}

std::vector<Shard> partition(const Shard& data, std::size_t m, SplitMode mode, Rng& rng) {
  return mode == SplitMode::Uniform ? partition_uniform(data, m, rng)
                                    : partition_proportional(data, m, rng);
}

}  // namespace dann
