#include "dann/shard.hpp"

#include <cmath>

namespace dann {

Shard::Shard(int id, std::size_t dim, std::vector<double> features,
             std::vector<std::uint8_t> labels)
    : id_(id), dim_(dim), features_(std::move(features)), labels_(std::move(labels)) {
  if (dim_ == 0) throw InvalidInput("shard dimension must be at least 1");
  if (labels_.empty()) throw InvalidInput("shard must hold at least one point");
  if (features_.size() != labels_.size() * dim_) {
    throw InvalidInput("feature buffer size does not match labels * dim");
  }
  for (double v : features_) {
    if (!std::isfinite(v)) throw InvalidInput("shard features must be finite");
  }
  for (auto y : labels_) {
    if (y > 1) throw InvalidInput("labels must be 0 or 1");
  }
}

Shard Shard::from_points(int id, std::span<const LabeledPoint> points) {
  if (points.empty()) throw InvalidInput("shard must hold at least one point");
  const std::size_t dim = points.front().features.size();
  std::vector<double> features;
  features.reserve(points.size() * dim);
  std::vector<std::uint8_t> labels;
  labels.reserve(points.size());
  for (const auto& p : points) {
    if (p.features.size() != dim) throw InvalidInput("points must share one dimension");
    if (p.label != 0 && p.label != 1) throw InvalidInput("labels must be 0 or 1");
    features.insert(features.end(), p.features.begin(), p.features.end());
    labels.push_back(static_cast<std::uint8_t>(p.label));
  }
  return Shard(id, dim, std::move(features), std::move(labels));
}

LabeledPoint Shard::point(std::size_t i) const {
  auto f = features(i);
  return {std::vector<double>(f.begin(), f.end()), label(i)};
}

Shard Shard::subset(int id, std::span<const std::size_t> rows) const {
  std::vector<double> features;
  features.reserve(rows.size() * dim_);
  std::vector<std::uint8_t> labels;
  labels.reserve(rows.size());
  for (auto r : rows) {
    if (r >= size()) throw InvalidInput("subset row out of range");
    auto f = this->features(r);
    features.insert(features.end(), f.begin(), f.end());
    labels.push_back(labels_[r]);
  }
  return Shard(id, dim_, std::move(features), std::move(labels));
}

std::vector<std::size_t> shard_sizes(std::span<const Shard> shards) {
  std::vector<std::size_t> sizes;
  sizes.reserve(shards.size());
  for (const auto& s : shards) sizes.push_back(s.size());
  return sizes;
}

}  // namespace dann
