#include "dann/baselines.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace dann {

std::size_t qiao_k(std::size_t nj, const StoppingConfig& cfg) {
  validate_stopping_config(cfg);
  if (nj < 1 || static_cast<std::int64_t>(nj) > cfg.total_size) {
    throw InvalidInput("nj must lie in [1, N]");
  }
  const double d = cfg.dim;
  const double value =
      static_cast<double>(nj) * std::pow(static_cast<double>(cfg.total_size), -d / (2.0 + d));
  const auto k = static_cast<std::size_t>(std::ceil(value));
  return std::clamp<std::size_t>(k, 1, nj);
}

int dnn_qiao_classify(std::span<const NeighborProfile> profiles,
                      std::span<const std::size_t> shard_sizes, const StoppingConfig& cfg) {
  validate_shard_sizes(shard_sizes, cfg);
  if (profiles.size() != shard_sizes.size()) {
    throw InvalidInput("one profile per shard is required");
  }
  std::vector<LocalEstimate> locals;
  locals.reserve(profiles.size());
  for (std::size_t j = 0; j < profiles.size(); ++j) {
    const std::size_t k = qiao_k(shard_sizes[j], cfg);
    if (profiles[j].k_max() < k) throw InvalidInput("neighbor profile too shallow for qiao_k");
    locals.push_back(local_estimate(profiles[j], k));
  }
  return classify(aggregate(locals).eta);
}

int d1nn_classify(std::span<const NeighborProfile> profiles) {
  std::vector<LocalEstimate> locals;
  locals.reserve(profiles.size());
  for (const auto& p : profiles) locals.push_back(local_estimate(p, 1));
  return classify(aggregate(locals).eta);
}

AdaptiveSelection dann_nes_select(std::span<const NeighborProfile> profiles,
                                  std::span<const std::size_t> shard_sizes,
                                  const StoppingConfig& cfg) {
  validate_shard_sizes(shard_sizes, cfg);
  return adaptive_select_with_bound(profiles, shard_sizes, cfg, shard_sizes[0]);
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Dann:
      return "DANN";
    case Method::DannNes:
      return "DANN_nes";
    case Method::DnnQiao:
      return "DNN_qiao";
    case Method::D1nn:
      return "D1NN";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Method m : kAllMethods) {
    std::string candidate(to_string(m));
    std::transform(candidate.begin(), candidate.end(), candidate.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (candidate == lowered) return m;
  }
  throw InvalidInput("unknown classifier '" + std::string(name) + "'");
}

std::vector<std::size_t> required_depths(Method method, std::span<const std::size_t> shard_sizes,
                                         const StoppingConfig& cfg) {
  validate_shard_sizes(shard_sizes, cfg);
  const std::size_t n1 = shard_sizes[0];
  std::vector<std::size_t> depths(shard_sizes.size());
  switch (method) {
    case Method::Dann: {
      const std::size_t bound = std::min(k1_bound(n1, cfg), n1);
      for (std::size_t j = 0; j < depths.size(); ++j) depths[j] = sub_k(bound, n1, shard_sizes[j]);
      break;
    }
    case Method::DannNes:
      std::copy(shard_sizes.begin(), shard_sizes.end(), depths.begin());
      break;
    case Method::DnnQiao:
      for (std::size_t j = 0; j < depths.size(); ++j) depths[j] = qiao_k(shard_sizes[j], cfg);
      break;
    case Method::D1nn:
      std::fill(depths.begin(), depths.end(), 1);
      break;
  }
  return depths;
}

Prediction predict(Method method, std::span<const Shard> shards, std::span<const double> query,
                   const StoppingConfig& cfg) {
  const auto sizes = shard_sizes(shards);
  const auto depths = required_depths(method, sizes, cfg);
  std::vector<NeighborProfile> profiles;
  profiles.reserve(shards.size());
  for (std::size_t j = 0; j < shards.size(); ++j) {
    profiles.push_back(neighbor_profile(shards[j], query, depths[j]));
  }

  switch (method) {
    case Method::Dann: {
      const auto sel = adaptive_select(profiles, sizes, cfg);
      return {sel.label, sel.k1_hat};
    }
    case Method::DannNes: {
      const auto sel = dann_nes_select(profiles, sizes, cfg);
      return {sel.label, sel.k1_hat};
    }
    case Method::DnnQiao:
      return {dnn_qiao_classify(profiles, sizes, cfg), std::nullopt};
    case Method::D1nn:
      return {d1nn_classify(profiles), std::nullopt};
  }
  throw InvalidInput("unknown classifier");
}

}  // namespace dann
