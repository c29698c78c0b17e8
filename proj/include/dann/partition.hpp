#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "dann/random.hpp"
#include "dann/shard.hpp"

namespace dann {

enum class SplitMode { Uniform, Proportional };

std::string_view to_string(SplitMode mode);
SplitMode parse_split_mode(std::string_view name);

/// m = ceil(N^epsilon).
std::size_t shard_count(std::size_t total, double epsilon);

/// Block sizes for an even split: the first N mod m blocks get one extra point.
std::vector<std::size_t> uniform_sizes(std::size_t total, std::size_t m);

/// Block sizes proportional to m : m-1 : ... : 1 (largest first) by
/// largest-remainder apportionment. When that would leave a block empty, every
/// block is first given one point and the remaining N - m points are
/// apportioned the same way. Requires 1 <= m <= N.
std::vector<std::size_t> proportional_sizes(std::size_t total, std::size_t m);

/// Shuffles the rows, then cuts contiguous blocks. Shards are numbered 1..m
/// and returned largest first.
std::vector<Shard> partition_uniform(const Shard& data, std::size_t m, Rng& rng);
std::vector<Shard> partition_proportional(const Shard& data, std::size_t m, Rng& rng);
std::vector<Shard> partition(const Shard& data, std::size_t m, SplitMode mode, Rng& rng);

}  // namespace dann
