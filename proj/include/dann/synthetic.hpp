#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dann/random.hpp"
#include "dann/shard.hpp"

namespace dann {

/// Benchmark model: X uniform on [0,1]^d and
///   eta(x) = min(1, max(5/3 * (1 - |x| / sqrt(d)), kappa)).
/// kappa controls how far eta stays from 1/2; d defaults to 3.
struct SyntheticModel {
  double kappa = 0.6;
  std::size_t dim = 3;
};

void validate_model(const SyntheticModel& model);

double eta_true(std::span<const double> x, const SyntheticModel& model);

/// 1 iff eta_true(x) >= 1/2.
int bayes_classify(std::span<const double> x, const SyntheticModel& model);

/// Uniform point in [0,1]^dim.
std::vector<double> uniform_point(std::size_t dim, Rng& rng);

/// n points; for each, dim feature draws then one label draw.
Shard generate_sample(std::size_t n, const SyntheticModel& model, Rng& rng, int shard_id = 1);

}  // namespace dann
