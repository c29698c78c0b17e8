#include "dann/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <string_view>

#include "dann/parallel.hpp"

namespace dann {

namespace {

constexpr std::uint64_t kRealPartitionStream = 3;

// Column positions in the UCI adult layout.
constexpr std::size_t kAge = 0;
constexpr std::size_t kFnlwgt = 2;
constexpr std::size_t kEducationNum = 4;
constexpr std::size_t kCapitalGain = 10;
constexpr std::size_t kCapitalLoss = 11;
constexpr std::size_t kHoursPerWeek = 12;
constexpr std::size_t kIncome = 14;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<double> parse_number(std::string_view s) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::optional<int> parse_income(std::string_view s) {
  if (!s.empty() && s.back() == '.') s.remove_suffix(1);
  if (s == ">50K") return 1;
  if (s == "<=50K") return 0;
  return std::nullopt;
}

}  // namespace

AdultData ingest_adult(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());

  AdultData data;
  constexpr std::size_t used[] = {kAge,         kFnlwgt,       kEducationNum, kCapitalGain,
                                  kCapitalLoss, kHoursPerWeek, kIncome};
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    ++data.summary.lines;
    const auto fields = split_fields(line);
    if (fields.size() < kIncome + 1) {
      ++data.summary.malformed;
      continue;
    }
    if (std::any_of(std::begin(used), std::end(used),
                    [&](std::size_t c) { return fields[c] == "?"; })) {
      ++data.summary.missing;
      continue;
    }
    const auto age = parse_number(fields[kAge]);
    const auto fnlwgt = parse_number(fields[kFnlwgt]);
    const auto edu = parse_number(fields[kEducationNum]);
    const auto gain = parse_number(fields[kCapitalGain]);
    const auto loss = parse_number(fields[kCapitalLoss]);
    const auto hours = parse_number(fields[kHoursPerWeek]);
    const auto income = parse_income(fields[kIncome]);
    if (!age || !fnlwgt || !edu || !gain || !loss || !hours || !income) {
      ++data.summary.malformed;
      continue;
    }
    data.records.push_back({*age, *fnlwgt, *edu, *gain, *loss, *hours, *income});
  }
  data.summary.retained = data.records.size();
  return data;
}

Shard records_to_shard(const std::vector<AdultRecord>& records, int shard_id) {
  std::vector<double> features;
  features.reserve(records.size() * 6);
  std::vector<std::uint8_t> labels;
  labels.reserve(records.size());
  for (const auto& r : records) {
    features.insert(features.end(), {r.age, r.fnlwgt, r.education_num, r.capital_gain,
                                     r.capital_loss, r.hours_per_week});
    labels.push_back(static_cast<std::uint8_t>(r.income_label));
  }
  return Shard(shard_id, 6, std::move(features), std::move(labels));
}

ScalingParams fit_scaling(const Shard& data) {
  ScalingParams params{std::vector<double>(data.dim()), std::vector<double>(data.dim())};
  for (std::size_t c = 0; c < data.dim(); ++c) {
    params.min[c] = params.max[c] = data.features(0)[c];
  }
  for (std::size_t i = 1; i < data.size(); ++i) {
    const auto row = data.features(i);
    for (std::size_t c = 0; c < data.dim(); ++c) {
      params.min[c] = std::min(params.min[c], row[c]);
      params.max[c] = std::max(params.max[c], row[c]);
    }
  }
  return params;
}

Shard apply_scaling(const Shard& data, const ScalingParams& params) {
  if (params.min.size() != data.dim() || params.max.size() != data.dim()) {
    throw InvalidInput("scaling parameters do not match the data dimension");
  }
  std::vector<double> features(data.feature_data().begin(), data.feature_data().end());
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t c = 0; c < data.dim(); ++c) {
      double& v = features[i * data.dim() + c];
      const double range = params.max[c] - params.min[c];
      v = range > 0 ? std::clamp((v - params.min[c]) / range, 0.0, 1.0) : 0.0;
    }
  }
  return Shard(data.id(), data.dim(), std::move(features),
               std::vector<std::uint8_t>(data.labels().begin(), data.labels().end()));
}

ScaledData scale_features(const std::vector<AdultRecord>& records) {
  if (records.empty()) throw InvalidInput("cannot scale an empty record list");
  const Shard raw = records_to_shard(records);
  ScalingParams params = fit_scaling(raw);
  return {apply_scaling(raw, params), std::move(params)};
}

DatasetSplit train_test_split(const Shard& data, double test_fraction, Rng& rng) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw InvalidInput("test fraction must lie in (0,1)");
  }
  const auto n_train = static_cast<std::size_t>(
      std::ceil(static_cast<double>(data.size()) * (1.0 - test_fraction)));
  if (n_train < 1 || n_train >= data.size()) {
    throw InvalidInput("split would leave the training or test set empty");
  }
  std::vector<std::size_t> rows(data.size());
  std::iota(rows.begin(), rows.end(), 0);
  std::shuffle(rows.begin(), rows.end(), rng);
  std::span<const std::size_t> all(rows);
  return {data.subset(1, all.first(n_train)), data.subset(2, all.subspan(n_train))};
}

ExperimentResult evaluate_real(const Shard& train, const Shard& test, ExperimentConfig cfg,
                               unsigned threads) {
  if (train.dim() != test.dim()) throw InvalidInput("train and test dimensions differ");
  cfg.total_size = train.size();
  cfg.dim = train.dim();
  validate_config(cfg);
  const StoppingConfig stopping{static_cast<std::int64_t>(train.size()),
                                static_cast<int>(train.dim()), cfg.include_log_in_bound};

  const auto train_ones = std::accumulate(train.labels().begin(), train.labels().end(), 0L);
  const int majority = 2 * train_ones >= static_cast<long>(train.size()) ? 1 : 0;
  const double n_test = static_cast<double>(test.size());

  ExperimentResult result;
  result.config = cfg;
  result.metric = Metric::TestError;

  struct PointRun {
    int label = 0;
    double seconds = 0.0;
    std::optional<std::size_t> k1;
    bool failed = false;
  };

  for (std::size_t e = 0; e < cfg.epsilons.size(); ++e) {
    const std::size_t m = shard_count(train.size(), cfg.epsilons[e]);
    Rng split_rng = derive_stream(cfg.seed, {kRealPartitionStream, e});
    const auto shards = partition(train, m, cfg.split, split_rng);

    for (Method method : cfg.methods) {
      std::vector<PointRun> points(test.size());
      parallel_for(test.size(), threads, [&](std::size_t i) {
        try {
          const auto start = std::chrono::steady_clock::now();
          const Prediction p = predict(method, shards, test.features(i), stopping);
          points[i].seconds =
              std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
          points[i].label = p.label;
          points[i].k1 = p.k1_hat;
        } catch (const std::exception&) {
          points[i].failed = true;
        }
      });

      CellResult cell;
      cell.classifier = std::string(to_string(method));
      cell.epsilon = cfg.epsilons[e];
      cell.m = m;
      std::size_t errors = 0;
      std::size_t positives = 0;
      double seconds = 0.0;
      std::vector<std::size_t> k1s;
      for (std::size_t i = 0; i < test.size(); ++i) {
        const auto& p = points[i];
        if (p.failed) {
          ++cell.failures;
          continue;
        }
        ++cell.runs;
        errors += p.label != test.label(i) ? 1 : 0;
        positives += p.label == 1 ? 1 : 0;
        seconds += p.seconds;
        if (p.k1) k1s.push_back(*p.k1);
      }
      if (cell.runs > 0) {
        const double r = static_cast<double>(cell.runs);
        cell.rate = static_cast<double>(errors) / r;
        cell.mc_stderr = std::sqrt(cell.rate * (1.0 - cell.rate) / r);
        cell.positive_rate = static_cast<double>(positives) / r;
        cell.mean_runtime_s = seconds / r;
      }
      if (!k1s.empty()) cell.k1 = summarize_k1(std::move(k1s));
      result.cells.push_back(std::move(cell));
    }

    CellResult base;
    base.classifier = kMajorityName;
    base.epsilon = cfg.epsilons[e];
    base.m = m;
    base.runs = test.size();
    std::size_t errors = 0;
    for (std::size_t i = 0; i < test.size(); ++i) errors += test.label(i) != majority ? 1 : 0;
    base.rate = static_cast<double>(errors) / n_test;
    base.mc_stderr = std::sqrt(base.rate * (1.0 - base.rate) / n_test);
    base.positive_rate = majority == 1 ? 1.0 : 0.0;
    result.cells.push_back(std::move(base));
  }
  return result;
}

}  // namespace dann
