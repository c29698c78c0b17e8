#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dann {

/// Raised when an argument violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a file cannot be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LabeledPoint {
  std::vector<double> features;
  int label = 0;
};

/// One machine's sub-sample. Points are stored row-major in a flat buffer;
/// the container is immutable after construction.
class Shard {
 public:
  /// Builds a shard from a row-major feature buffer (size() * dim entries).
  /// Throws InvalidInput when the shard would be empty, a feature is not
  /// finite, or a label is outside {0,1}.
  Shard(int id, std::size_t dim, std::vector<double> features, std::vector<std::uint8_t> labels);

  static Shard from_points(int id, std::span<const LabeledPoint> points);

  [[nodiscard]] int id() const { return id_; }
  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] std::size_t dim() const { return dim_; }

  [[nodiscard]] std::span<const double> features(std::size_t i) const {
    return {features_.data() + i * dim_, dim_};
  }
  [[nodiscard]] int label(std::size_t i) const { return labels_[i]; }

  [[nodiscard]] std::span<const double> feature_data() const { return features_; }
  [[nodiscard]] std::span<const std::uint8_t> labels() const { return labels_; }

  [[nodiscard]] LabeledPoint point(std::size_t i) const;

  /// Copies the rows named by `rows` (in that order) into a new shard.
  [[nodiscard]] Shard subset(int id, std::span<const std::size_t> rows) const;

 private:
  int id_;
  std::size_t dim_;
  std::vector<double> features_;
  std::vector<std::uint8_t> labels_;
};

/// Sizes of `shards` in order.
std::vector<std::size_t> shard_sizes(std::span<const Shard> shards);

}  // namespace dann
