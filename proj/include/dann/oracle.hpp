#pragma once

// Reference implementations kept deliberately naive. They back the property
// tests and the `selftest` subcommand; nothing on the hot path calls them.

#include "dann/neighbors.hpp"

namespace dann::oracle {

/// Computes every distance, stable-sorts all of them, keeps the first k_max.
NeighborProfile brute_force_profile(const Shard& shard, std::span<const double> query,
                                    std::size_t k_max);

}  // namespace dann::oracle
