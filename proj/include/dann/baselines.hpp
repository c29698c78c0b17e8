#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dann/adaptive.hpp"

namespace dann {

enum class BaselineKind { DnnQiao, D1nn, DannNes };

/// Fixed per-shard depth min(max(1, ceil(nj * N^(-d/(2+d)))), nj).
std::size_t qiao_k(std::size_t nj, const StoppingConfig& cfg);

/// Pooled majority at the fixed depths qiao_k(n_j).
int dnn_qiao_classify(std::span<const NeighborProfile> profiles,
                      std::span<const std::size_t> shard_sizes, const StoppingConfig& cfg);

/// Vote over every shard's single nearest label; a tie goes to 1.
int d1nn_classify(std::span<const NeighborProfile> profiles);

/// Adaptive search with the early-stop bound replaced by n_1. Profiles must
/// be full depth (k_max = n_j).
AdaptiveSelection dann_nes_select(std::span<const NeighborProfile> profiles,
                                  std::span<const std::size_t> shard_sizes,
                                  const StoppingConfig& cfg);

// ---------------------------------------------------------------------------
// End-to-end distributed classifiers over raw shards.

enum class Method { Dann, DannNes, DnnQiao, D1nn };

inline constexpr Method kAllMethods[] = {Method::Dann, Method::DannNes, Method::DnnQiao,
                                         Method::D1nn};

std::string_view to_string(Method method);
/// Accepts "DANN", "DANN_nes", "DNN_qiao", "D1NN" (case-insensitive).
Method parse_method(std::string_view name);

/// Neighbor depth each shard must supply for `method`.
std::vector<std::size_t> required_depths(Method method, std::span<const std::size_t> shard_sizes,
                                         const StoppingConfig& cfg);

struct Prediction {
  int label = 0;
  std::optional<std::size_t> k1_hat;  // set for the adaptive methods
};

/// Computes each shard's neighbor profile at the depth the method needs and
/// applies it. Shards must be sorted by size, largest first.
Prediction predict(Method method, std::span<const Shard> shards, std::span<const double> query,
                   const StoppingConfig& cfg);

}  // namespace dann
