#include "dann/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "dann/parallel.hpp"
#include "dann/synthetic.hpp"

namespace dann {

namespace {

constexpr std::uint64_t kSampleStream = 1;
constexpr std::uint64_t kPartitionStream = 2;

struct CellRun {
  std::size_t agreements = 0;
  std::size_t positives = 0;
  double seconds = 0.0;
  std::vector<std::size_t> k1s;
  bool failed = false;
};

}  // namespace

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.total_size < 2) throw InvalidInput("N must be at least 2");
  if (cfg.runs < 1) throw InvalidInput("runs must be at least 1");
  if (cfg.queries_per_run < 1) throw InvalidInput("queries_per_run must be at least 1");
  if (cfg.epsilons.empty()) throw InvalidInput("at least one epsilon is required");
  if (cfg.methods.empty()) throw InvalidInput("at least one classifier is required");
  for (double e : cfg.epsilons) {
    if (!(e >= 0.0 && e < 1.0)) throw InvalidInput("epsilon must lie in [0,1)");
  }
  validate_model({cfg.kappa, cfg.dim});
}

const CellResult& ExperimentResult::cell(std::string_view classifier, double epsilon) const {
  for (const auto& c : cells) {
    if (c.classifier == classifier && std::abs(c.epsilon - epsilon) < 1e-9) return c;
  }
  throw InvalidInput("no result cell for " + std::string(classifier));
}

bool same_outcomes(const ExperimentResult& a, const ExperimentResult& b) {
  if (a.metric != b.metric || a.cells.size() != b.cells.size()) return false;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    const auto& x = a.cells[i];
    const auto& y = b.cells[i];
    if (x.classifier != y.classifier || x.epsilon != y.epsilon || x.m != y.m || x.runs != y.runs ||
        x.failures != y.failures || x.rate != y.rate || x.mc_stderr != y.mc_stderr ||
        x.positive_rate != y.positive_rate || x.k1 != y.k1) {
      return false;
    }
  }
  return true;
}

K1Summary summarize_k1(std::vector<std::size_t> values) {
  if (values.empty()) throw InvalidInput("cannot summarize an empty k1 list");
  std::sort(values.begin(), values.end());
  return {values.front(), values[(values.size() - 1) / 2], values.back()};
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, unsigned threads) {
  validate_config(cfg);
  const SyntheticModel model{cfg.kappa, cfg.dim};
  const StoppingConfig stopping{static_cast<std::int64_t>(cfg.total_size),
                                static_cast<int>(cfg.dim), cfg.include_log_in_bound};
  const std::size_t n_eps = cfg.epsilons.size();
  const std::size_t n_methods = cfg.methods.size();

  std::vector<std::vector<CellRun>> per_run(cfg.runs);
  parallel_for(cfg.runs, threads, [&](std::size_t run) {
    auto& cells = per_run[run];
    cells.resize(n_eps * n_methods);

    Rng sample_rng = derive_stream(cfg.seed, {kSampleStream, run});
    const Shard sample = generate_sample(cfg.total_size, model, sample_rng);
    std::vector<std::vector<double>> queries;
    std::vector<int> truth;
    for (std::size_t q = 0; q < cfg.queries_per_run; ++q) {
      queries.push_back(uniform_point(cfg.dim, sample_rng));
      truth.push_back(bayes_classify(queries.back(), model));
    }

    for (std::size_t e = 0; e < n_eps; ++e) {
      Rng split_rng = derive_stream(cfg.seed, {kPartitionStream, run, e});
      const auto shards =
          partition(sample, shard_count(cfg.total_size, cfg.epsilons[e]), cfg.split, split_rng);
      for (std::size_t mi = 0; mi < n_methods; ++mi) {
        auto& out = cells[e * n_methods + mi];
        try {
          for (std::size_t q = 0; q < queries.size(); ++q) {
            const auto start = std::chrono::steady_clock::now();
            const Prediction p = predict(cfg.methods[mi], shards, queries[q], stopping);
            out.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                               .count();
            out.agreements += p.label == truth[q] ? 1 : 0;
            out.positives += p.label == 1 ? 1 : 0;
            if (p.k1_hat) out.k1s.push_back(*p.k1_hat);
          }
        } catch (const std::exception&) {
          out = CellRun{};
          out.failed = true;
        }
      }
    }
  });

  ExperimentResult result;
  result.config = cfg;
  result.metric = Metric::BayesAgreement;
  const double q = static_cast<double>(cfg.queries_per_run);
  for (std::size_t e = 0; e < n_eps; ++e) {
    for (std::size_t mi = 0; mi < n_methods; ++mi) {
      CellResult cell;
      cell.classifier = std::string(to_string(cfg.methods[mi]));
      cell.epsilon = cfg.epsilons[e];
      cell.m = shard_count(cfg.total_size, cfg.epsilons[e]);

      std::vector<double> agreement;
      std::vector<std::size_t> k1s;
      double positives = 0.0;
      double seconds = 0.0;
      for (const auto& cells : per_run) {
        const auto& c = cells[e * n_methods + mi];
        if (c.failed) {
          ++cell.failures;
          continue;
        }
        agreement.push_back(static_cast<double>(c.agreements) / q);
        positives += static_cast<double>(c.positives) / q;
        seconds += c.seconds / q;
        k1s.insert(k1s.end(), c.k1s.begin(), c.k1s.end());
      }
      cell.runs = agreement.size();
      if (cell.runs > 0) {
        const double r = static_cast<double>(cell.runs);
        double sum = 0.0;
        for (double a : agreement) sum += a;
        cell.rate = sum / r;
        double ss = 0.0;
        for (double a : agreement) ss += (a - cell.rate) * (a - cell.rate);
        cell.mc_stderr = std::sqrt(ss / r / r);
        cell.positive_rate = positives / r;
        cell.mean_runtime_s = seconds / r;
        // With kappa > 1/2 the Bayes rule is identically 1.
        if (cfg.kappa > 0.5 && cell.positive_rate != cell.rate) {
          throw std::logic_error("agreement differs from positive rate although Bayes rule is 1");
        }
      }
      if (!k1s.empty()) cell.k1 = summarize_k1(std::move(k1s));
      result.cells.push_back(std::move(cell));
    }
  }
  return result;
}

}  // namespace dann
