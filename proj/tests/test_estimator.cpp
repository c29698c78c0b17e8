#include <doctest.h>

#include <random>

#include "dann/estimator.hpp"
#include "dann/neighbors.hpp"
#include "support.hpp"

using namespace dann;
using dann::testing::profile_from_labels;

TEST_CASE("local estimate") {
  CHECK(local_estimate(profile_from_labels({1, 0, 1}), 3).eta() == doctest::Approx(2.0 / 3.0));
  CHECK(local_estimate(profile_from_labels({0, 0}), 2).eta() == 0.0);
  CHECK(local_estimate(profile_from_labels({1, 1, 1, 1, 1}), 4).eta() == 1.0);

  const auto p = profile_from_labels({1, 0});
  CHECK_THROWS_AS(local_estimate(p, 0), InvalidInput);
  CHECK_THROWS_AS(local_estimate(p, 3), InvalidInput);
}

TEST_CASE("aggregate is the k-weighted mean") {
  const std::vector<LocalEstimate> equal{{1, 2, 1}, {2, 2, 2}};
  CHECK(aggregate(equal).eta == 0.75);
  const std::vector<LocalEstimate> weighted{{1, 3, 3}, {2, 1, 0}};
  const auto agg = aggregate(weighted);
  CHECK(agg.eta == 0.75);
  CHECK(agg.total_k == 4);
  CHECK(agg.ks == std::vector<std::size_t>{3, 1});

  CHECK_THROWS_AS(aggregate(std::vector<LocalEstimate>{}), InvalidInput);
  CHECK_THROWS_AS(aggregate(std::vector<LocalEstimate>{{1, 0, 0}}), InvalidInput);
}

TEST_CASE("aggregate of constant local etas") {
  // eta = 1/2 in every shard at depths 2, 4, 8.
  const std::vector<LocalEstimate> locals{{1, 2, 1}, {2, 4, 2}, {3, 8, 4}};
  CHECK(aggregate(locals).eta == 0.5);
}

TEST_CASE("pooled-count identity and range on random profiles") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 12)(gen);
    std::vector<LocalEstimate> locals;
    std::int64_t pooled = 0;
    double weighted = 0.0;
    std::int64_t total = 0;
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<int> labels(std::uniform_int_distribution<std::size_t>(1, 30)(gen));
      for (auto& y : labels) y = std::bernoulli_distribution(0.4)(gen) ? 1 : 0;
      const auto p = profile_from_labels(labels, static_cast<int>(j + 1));
      const std::size_t k = std::uniform_int_distribution<std::size_t>(1, labels.size())(gen);
      locals.push_back(local_estimate(p, k));
      for (std::size_t i = 0; i < k; ++i) pooled += labels[i];
      weighted += static_cast<double>(k) * locals.back().eta();
      total += static_cast<std::int64_t>(k);
    }
    const auto agg = aggregate(locals);
    CHECK(agg.ones == pooled);
    CHECK(agg.eta * static_cast<double>(agg.total_k) == doctest::Approx(static_cast<double>(pooled)));
    CHECK(agg.eta == doctest::Approx(weighted / static_cast<double>(total)));
    CHECK(agg.eta >= 0.0);
    CHECK(agg.eta <= 1.0);
  }
}

TEST_CASE("classify uses >= 1/2") {
  CHECK(classify(0.5) == 1);
  CHECK(classify(0.4999) == 0);
  CHECK(classify(1.0) == 1);
  CHECK(classify(0.0) == 0);
  CHECK_THROWS_AS(classify(-0.1), InvalidInput);
  CHECK_THROWS_AS(classify(1.5), InvalidInput);
  CHECK_THROWS_AS(classify(std::nan("")), InvalidInput);
}
