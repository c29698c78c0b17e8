#include "dann/synthetic.hpp"

#include <algorithm>
#include <cmath>

namespace dann {

void validate_model(const SyntheticModel& model) {
  if (model.dim < 1) throw InvalidInput("model dimension must be at least 1");
  if (!(model.kappa >= 0.0 && model.kappa <= 1.0)) throw InvalidInput("kappa must lie in [0,1]");
}

double eta_true(std::span<const double> x, const SyntheticModel& model) {
  validate_model(model);
  if (x.size() != model.dim) throw InvalidInput("point dimension does not match the model");
  double norm2 = 0.0;
  for (double v : x) norm2 += v * v;
  const double linear =
      5.0 / 3.0 * (1.0 - std::sqrt(norm2) / std::sqrt(static_cast<double>(model.dim)));
  // Below |x| = 0.4 sqrt(d) the linear part exceeds 1; clip so eta is a probability.
  return std::min(1.0, std::max(linear, model.kappa));
}

int bayes_classify(std::span<const double> x, const SyntheticModel& model) {
  return eta_true(x, model) >= 0.5 ? 1 : 0;
}

std::vector<double> uniform_point(std::size_t dim, Rng& rng) {
  std::vector<double> x(dim);
  for (auto& v : x) v = uniform01(rng);
  return x;
}

Shard generate_sample(std::size_t n, const SyntheticModel& model, Rng& rng, int shard_id) {
  validate_model(model);
  if (n < 1) throw InvalidInput("sample size must be at least 1");
  std::vector<double> features(n * model.dim);
  std::vector<std::uint8_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::span<double> row(features.data() + i * model.dim, model.dim);
    for (auto& v : row) v = uniform01(rng);
    labels[i] = uniform01(rng) < eta_true(row, model) ? 1 : 0;
  }
  return Shard(shard_id, model.dim, std::move(features), std::move(labels));
}

}  // namespace dann
