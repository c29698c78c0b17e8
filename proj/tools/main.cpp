// dann: command-line front end for the distributed adaptive nearest-neighbor
// toolkit.
//
//   dann simulate   Monte-Carlo grid on the synthetic benchmark model
//   dann adult      train/test evaluation on the UCI adult income data
//   dann classify   label query points from one or more training CSVs
//   dann selftest   fast-path vs reference checks on random instances
//
// Every experiment option can also be set in a key = value config file passed
// with --config; command-line flags override the file.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "dann/dataset.hpp"
#include "dann/experiment.hpp"
#include "dann/labeled_csv.hpp"
#include "dann/oracle.hpp"
#include "dann/parallel.hpp"
#include "dann/report.hpp"

namespace fs = std::filesystem;
using namespace dann;

namespace {

struct GlobalOptions {
  std::uint64_t seed = ExperimentConfig{}.seed;
  unsigned threads = 0;
  std::string output = "results";
};

struct GridOptions {
  std::vector<std::size_t> sizes = {20000};
  std::vector<double> kappas = {0.60};
  std::vector<std::string> splits = {"uniform"};
  std::vector<double> epsilons = ExperimentConfig{}.epsilons;
  std::size_t runs = 200;
  std::vector<std::string> classifiers = {"DANN", "DANN_nes", "DNN_qiao", "D1NN"};
  std::size_t queries_per_run = 1;
  bool log_bound = true;
  bool full_grid = false;
};

std::string format_number(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

void print_table(std::ostream& out, const ExperimentResult& r) {
  const char* metric = r.metric == Metric::BayesAgreement ? "agreement" : "error";
  out << std::left << std::setw(10) << "classifier" << std::right << std::setw(6) << "eps"
      << std::setw(7) << "m" << std::setw(11) << metric << std::setw(9) << "stderr"
      << std::setw(12) << "runtime_s" << std::setw(16) << "k1 min/med/max" << '\n';
  for (const auto& c : r.cells) {
    out << std::left << std::setw(10) << c.classifier << std::right << std::setw(6)
        << format_number(c.epsilon) << std::setw(7) << c.m << std::setw(11) << std::fixed
        << std::setprecision(4) << c.rate << std::setw(9) << c.mc_stderr << std::setw(12)
        << std::scientific << std::setprecision(3) << c.mean_runtime_s << std::defaultfloat;
    if (c.k1) {
      std::ostringstream k;
      k << c.k1->min << '/' << c.k1->median << '/' << c.k1->max;
      out << std::setw(16) << k.str();
    }
    if (c.failures > 0) out << "  (" << c.failures << " failed)";
    out << '\n';
  }
}

void write_outputs(const fs::path& dir, const std::string& stem, const ExperimentResult& result) {
  fs::create_directories(dir);
  std::ofstream csv(dir / (stem + ".csv"));
  if (!csv) throw IoError("cannot write " + (dir / (stem + ".csv")).string());
  write_results_csv(csv, result);
  std::ofstream json(dir / (stem + ".json"));
  json << results_to_json(result).dump(2) << '\n';
}

void write_manifest(const fs::path& dir, const std::string& command, const ExperimentConfig& cfg,
                    unsigned threads) {
  fs::create_directories(dir);
  std::ofstream(dir / "manifest.json") << run_manifest(command, cfg, threads).dump(2) << '\n';
}

ExperimentConfig base_config(const GridOptions& grid, const GlobalOptions& global) {
  ExperimentConfig cfg;
  cfg.epsilons = grid.epsilons;
  cfg.runs = grid.runs;
  cfg.seed = global.seed;
  cfg.queries_per_run = grid.queries_per_run;
  cfg.include_log_in_bound = grid.log_bound;
  cfg.methods.clear();
  for (const auto& name : grid.classifiers) cfg.methods.push_back(parse_method(name));
  return cfg;
}

int run_simulate(GridOptions grid, const GlobalOptions& global) {
  if (grid.full_grid) {
    grid.sizes = {20000, 40000, 60000};
    grid.kappas = {0.55, 0.60, 0.65};
    grid.splits = {"uniform", "proportional"};
    grid.runs = 500;
  }
  const fs::path dir = global.output;
  ExperimentConfig cfg = base_config(grid, global);
  for (auto n : grid.sizes) {
    for (double kappa : grid.kappas) {
      for (const auto& split : grid.splits) {
        cfg.total_size = n;
        cfg.kappa = kappa;
        cfg.split = parse_split_mode(split);
        std::cout << "== N=" << n << " kappa=" << kappa << " split=" << split
                  << " runs=" << cfg.runs << '\n';
        const auto result = run_experiment(cfg, global.threads);
        print_table(std::cout, result);
        std::ostringstream stem;
        stem << "simulate_N" << n << "_kappa" << std::fixed << std::setprecision(2) << kappa << '_'
             << split;
        write_outputs(dir, stem.str(), result);
      }
    }
  }
  write_manifest(dir, "simulate", cfg, resolve_threads(global.threads));
  return 0;
}

int run_adult(const GridOptions& grid, const GlobalOptions& global, const std::string& data,
              double test_fraction) {
  const auto ingested = ingest_adult(data);
  const auto& s = ingested.summary;
  std::cout << "read " << s.lines << " rows: kept " << s.retained << ", dropped " << s.missing
            << " with missing values, " << s.malformed << " malformed\n";
  if (ingested.records.empty()) throw InvalidInput("no usable records in " + data);

  Rng split_rng = derive_stream(global.seed, {0});
  const auto split = train_test_split(records_to_shard(ingested.records), test_fraction, split_rng);
  const auto params = fit_scaling(split.train);
  const Shard train = apply_scaling(split.train, params);
  const Shard test = apply_scaling(split.test, params);
  std::cout << "train " << train.size() << ", test " << test.size() << '\n';

  ExperimentConfig cfg = base_config(grid, global);
  cfg.split = parse_split_mode(grid.splits.front());
  const auto result = evaluate_real(train, test, cfg, global.threads);
  print_table(std::cout, result);
  const fs::path dir = global.output;
  write_outputs(dir, "adult_" + grid.splits.front(), result);
  write_manifest(dir, "adult", result.config, resolve_threads(global.threads));
  return 0;
}

int run_classify(const GlobalOptions& global, const GridOptions& grid,
                 const std::vector<std::string>& train_files, const std::string& query_file,
                 const std::string& label_column, const std::string& method_name, bool scale,
                 bool output_set) {
  std::vector<Shard> shards;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < train_files.size(); ++j) {
    const auto table = read_labeled_csv(train_files[j], label_column, names);
    if (names.empty()) names = table.feature_names;
    shards.push_back(to_shard(table, static_cast<int>(j + 1)));
  }
  const auto query_table = read_labeled_csv(query_file, label_column, names);
  Shard queries(0, names.size(), query_table.features,
                std::vector<std::uint8_t>(query_table.rows, 0));

  if (scale) {
    std::vector<double> all;
    std::vector<std::uint8_t> labels;
    for (const auto& s : shards) {
      all.insert(all.end(), s.feature_data().begin(), s.feature_data().end());
      labels.insert(labels.end(), s.labels().begin(), s.labels().end());
    }
    const auto params = fit_scaling(Shard(0, names.size(), std::move(all), std::move(labels)));
    for (auto& s : shards) s = apply_scaling(s, params);
    queries = apply_scaling(queries, params);
  }

  std::stable_sort(shards.begin(), shards.end(),
                   [](const Shard& a, const Shard& b) { return a.size() > b.size(); });
  const auto sizes = shard_sizes(shards);
  const StoppingConfig stopping{
      static_cast<std::int64_t>(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0})),
      static_cast<int>(names.size()), grid.log_bound};
  const Method method = parse_method(method_name);

  std::vector<Prediction> predictions(queries.size());
  parallel_for(queries.size(), global.threads, [&](std::size_t i) {
    predictions[i] = predict(method, shards, queries.features(i), stopping);
  });

  std::ofstream file;
  if (output_set) {
    fs::create_directories(global.output);
    file.open(fs::path(global.output) / "predictions.csv");
    if (!file) throw IoError("cannot write predictions.csv");
  }
  std::ostream& out = output_set ? file : std::cout;
  out << "row,label,k1_hat\n";
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    out << i << ',' << predictions[i].label << ',';
    if (predictions[i].k1_hat) out << *predictions[i].k1_hat;
    out << '\n';
  }
  return 0;
}

int run_selftest(const GlobalOptions& global, std::size_t instances) {
  std::mt19937_64 gen(global.seed);
  std::size_t profile_failures = 0;
  std::size_t audit_failures = 0;
  for (std::size_t t = 0; t < instances; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 500)(gen);
    const std::size_t dim = std::uniform_int_distribution<std::size_t>(1, 6)(gen);
    const int grid = t % 3 == 0 ? 4 : 0;
    auto coord = [&] {
      return grid ? std::uniform_int_distribution<int>(0, grid)(gen) / double(grid)
                  : std::uniform_real_distribution<double>(0, 1)(gen);
    };
    std::vector<double> features(n * dim);
    for (auto& v : features) v = coord();
    std::vector<std::uint8_t> labels(n);
    for (auto& y : labels) y = std::bernoulli_distribution(0.5)(gen) ? 1 : 0;
    const Shard shard(1, dim, std::move(features), std::move(labels));
    std::vector<double> q(dim);
    for (auto& v : q) v = coord();
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(gen);
    const auto fast = neighbor_profile(shard, q, k);
    if (!(fast == oracle::brute_force_profile(shard, q, k))) ++profile_failures;

    if (n >= 2) {
      const StoppingConfig cfg{static_cast<std::int64_t>(n), static_cast<int>(dim), true};
      const std::vector<std::size_t> sizes{n};
      const std::vector<NeighborProfile> full{oracle::brute_force_profile(shard, q, n)};
      const auto sel = adaptive_select(full, sizes, cfg);
      const double threshold = stopping_threshold(cfg);
      bool ok = true;
      for (std::size_t k1 = 1; k1 < sel.k1_hat; ++k1) {
        ok = ok && stopping_statistic(aggregate_at(full, sizes, k1)) <= threshold;
      }
      if (sel.stop_reason == StopReason::ThresholdCrossed) {
        ok = ok && stopping_statistic(aggregate_at(full, sizes, sel.k1_hat)) > threshold;
      } else {
        ok = ok && sel.k1_hat == std::min(k1_bound(n, cfg), n);
      }
      if (!ok) ++audit_failures;
    }
  }
  std::cout << (profile_failures == 0 ? "PASS" : "FAIL") << " neighbor profiles match reference ("
            << instances - profile_failures << "/" << instances << ")\n";
  std::cout << (audit_failures == 0 ? "PASS" : "FAIL") << " adaptive stop rule audit ("
            << audit_failures << " failures)\n";
  return profile_failures == 0 && audit_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed adaptive nearest-neighbor classification"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a key = value file");

  GlobalOptions global;
  GridOptions grid;
  app.add_option("--seed", global.seed, "Base seed for every random stream")->capture_default_str();
  app.add_option("--threads", global.threads, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--output", global.output, "Output directory")->capture_default_str();

  app.add_option("--N", grid.sizes, "Total sample size(s) for simulate")->capture_default_str();
  app.add_option("--kappa", grid.kappas, "Signal floor(s) of the synthetic model")
      ->capture_default_str();
  app.add_option("--split", grid.splits, "uniform and/or proportional")->capture_default_str();
  app.add_option("--epsilons", grid.epsilons, "Split exponents; m = ceil(N^eps)")
      ->capture_default_str();
  app.add_option("--runs", grid.runs, "Monte-Carlo runs per grid cell")->capture_default_str();
  app.add_option("--classifiers", grid.classifiers, "Any of DANN DANN_nes DNN_qiao D1NN")
      ->capture_default_str();
  app.add_option("--queries-per-run", grid.queries_per_run, "Query points drawn per run")
      ->capture_default_str();
  app.add_flag("--log-bound,!--no-log-bound", grid.log_bound,
               "Include the ln N factor in the early-stop bound");

  auto* simulate = app.add_subcommand("simulate", "Run the synthetic benchmark grid");
  simulate->add_flag("--full-grid", grid.full_grid,
                     "N in {20000,40000,60000}, kappa in {.55,.60,.65}, both splits, 500 runs");

  auto* adult = app.add_subcommand("adult", "Evaluate on the UCI adult income data");
  std::string data_dir = "data";
  if (const char* env = std::getenv("DANN_DATA_DIR")) data_dir = env;
  std::string adult_path = (fs::path(data_dir) / "adult.data").string();
  double test_fraction = 0.2;
  adult->add_option("--data", adult_path, "Path to adult.data (default $DANN_DATA_DIR/adult.data)")
      ->capture_default_str();
  adult->add_option("--test-fraction", test_fraction, "Share of rows held out")
      ->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "Label query points");
  std::vector<std::string> train_files;
  std::string query_file;
  std::string label_column = "label";
  std::string method = "DANN";
  bool scale = false;
  classify_cmd->add_option("--train", train_files, "Training CSV; one shard per file")->required();
  classify_cmd->add_option("--query", query_file, "Query CSV with the same feature columns")
      ->required();
  classify_cmd->add_option("--label-column", label_column)->capture_default_str();
  classify_cmd->add_option("--method", method)->capture_default_str();
  classify_cmd->add_flag("--scale", scale, "Min-max scale features using the training data");

  auto* selftest = app.add_subcommand("selftest", "Compare fast paths against reference code");
  std::size_t instances = 500;
  selftest->add_option("--instances", instances)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) return run_simulate(grid, global);
    if (*adult) return run_adult(grid, global, adult_path, test_fraction);
    if (*classify_cmd) {
      const bool output_set = app.get_option("--output")->count() > 0;
      return run_classify(global, grid, train_files, query_file, label_column, method, scale,
                          output_set);
    }
    if (*selftest) return run_selftest(global, instances);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
