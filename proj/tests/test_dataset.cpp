#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "dann/dataset.hpp"
#include "dann/labeled_csv.hpp"
#include "dann/report.hpp"
#include "dann/synthetic.hpp"

using namespace dann;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& contents) {
  const fs::path path = fs::temp_directory_path() / ("dann_test_" + name);
  std::ofstream(path) << contents;
  return path;
}

const char* kRowHigh =
    "52, Self-emp-inc, 287927, HS-grad, 9, Married-civ-spouse, Exec-managerial, Wife, White, "
    "Female, 15024, 0, 40, United-States, >50K\n";
const char* kRowLow =
    "39, State-gov, 77516, Bachelors, 13, Never-married, Adm-clerical, Not-in-family, White, Male, "
    "2174, 0, 40, United-States, <=50K\n";

}  // namespace

TEST_CASE("ingest a single valid row") {
  const auto data = ingest_adult(write_temp("one.csv", kRowHigh));
  REQUIRE(data.records.size() == 1);
  const auto& r = data.records[0];
  CHECK(r.age == 52);
  CHECK(r.fnlwgt == 287927);
  CHECK(r.education_num == 9);
  CHECK(r.capital_gain == 15024);
  CHECK(r.capital_loss == 0);
  CHECK(r.hours_per_week == 40);
  CHECK(r.income_label == 1);
}

TEST_CASE("missing markers, malformed rows and the test-file label spelling") {
  std::string contents;
  contents += kRowLow;
  contents += "?, Private, 1000, HS-grad, 9, x, x, x, x, x, 0, 0, 40, US, <=50K\n";     // used column
  contents += "30, ?, 1000, HS-grad, 9, x, ?, x, x, x, 0, 0, 40, ?, <=50K\n";           // unused columns
  contents += "30, Private, abc, HS-grad, 9, x, x, x, x, x, 0, 0, 40, US, <=50K\n";     // bad number
  contents += "30, Private, 1000, HS-grad\n";                                          // short row
  contents += "30, Private, 1000, HS-grad, 9, x, x, x, x, x, 0, 0, 40, US, maybe\n";    // bad label
  contents += "41, Private, 2000, HS-grad, 10, x, x, x, x, x, 0, 0, 45, US, >50K.\n";
  contents += "\n";
  const auto data = ingest_adult(write_temp("mixed.csv", contents));
  CHECK(data.records.size() == 3);
  CHECK(data.summary.lines == 7);
  CHECK(data.summary.retained == 3);
  CHECK(data.summary.missing == 1);
  CHECK(data.summary.malformed == 3);
  CHECK(data.records[2].income_label == 1);
  CHECK_THROWS_AS(ingest_adult("/nonexistent/adult.data"), IoError);
}

TEST_CASE("UCI adult file") {
  const fs::path path = fs::path(DANN_DATA_DIR) / "adult.data";
  if (!fs::exists(path)) {
    MESSAGE("adult.data not found; skipping");
    return;
  }
  const auto a = ingest_adult(path);
  const auto b = ingest_adult(path);
  CHECK(a.records.size() == 32561);
  REQUIRE(b.records.size() == a.records.size());
  CHECK(a.records.front().age == b.records.front().age);
  CHECK(a.records.back().fnlwgt == b.records.back().fnlwgt);
}

TEST_CASE("min-max scaling") {
  std::vector<AdultRecord> records(3);
  for (int i = 0; i < 3; ++i) {
    records[i].age = 5.0 * i;  // 0, 5, 10
    records[i].fnlwgt = 7;     // constant
    records[i].education_num = 10 - i;
  }
  const auto scaled = scale_features(records);
  CHECK(scaled.shard.features(0)[0] == 0.0);
  CHECK(scaled.shard.features(1)[0] == 0.5);
  CHECK(scaled.shard.features(2)[0] == 1.0);
  for (int i = 0; i < 3; ++i) CHECK(scaled.shard.features(i)[1] == 0.0);

  std::vector<AdultRecord> test(1);
  test[0].age = 15;  // beyond training max
  test[0].education_num = -3;
  const auto applied = apply_scaling(records_to_shard(test), scaled.params);
  CHECK(applied.features(0)[0] == 1.0);
  CHECK(applied.features(0)[2] == 0.0);

  const auto again = apply_scaling(scaled.shard, fit_scaling(scaled.shard));
  CHECK(std::equal(again.feature_data().begin(), again.feature_data().end(),
                   scaled.shard.feature_data().begin()));
  CHECK_THROWS_AS(scale_features({}), InvalidInput);
}

TEST_CASE("train/test split") {
  std::vector<double> features(32561);
  std::iota(features.begin(), features.end(), 0.0);
  const Shard data(1, 1, features, std::vector<std::uint8_t>(32561, 0));
  Rng a = derive_stream(9, {});
  const auto split = train_test_split(data, 0.2, a);
  CHECK(split.train.size() == 26049);
  CHECK(split.test.size() == 6512);

  std::set<double> seen;
  for (double v : split.train.feature_data()) seen.insert(v);
  for (double v : split.test.feature_data()) seen.insert(v);
  CHECK(seen.size() == 32561);

  Rng b = derive_stream(9, {});
  const auto repeat = train_test_split(data, 0.2, b);
  CHECK(std::equal(split.test.feature_data().begin(), split.test.feature_data().end(),
                   repeat.test.feature_data().begin()));

  const Shard ten(1, 1, std::vector<double>(10, 0.5), std::vector<std::uint8_t>(10, 1));
  const auto half = train_test_split(ten, 0.5, a);
  CHECK(half.train.size() == 5);
  CHECK(half.test.size() == 5);
  CHECK_THROWS_AS(train_test_split(ten, 0.0, a), InvalidInput);
  CHECK_THROWS_AS(train_test_split(ten, 1.0, a), InvalidInput);
}

TEST_CASE("evaluate_real") {
  Rng rng = derive_stream(4, {});
  const Shard train = generate_sample(1500, {0.3, 3}, rng);
  const Shard test = generate_sample(200, {0.3, 3}, rng);
  ExperimentConfig cfg;
  cfg.epsilons = {0.0, 0.5};
  cfg.split = SplitMode::Proportional;
  const auto result = evaluate_real(train, test, cfg, 2);
  CHECK(result.metric == Metric::TestError);
  CHECK(result.config.total_size == 1500);
  CHECK(result.cells.size() == 2 * (cfg.methods.size() + 1));

  // epsilon = 0 is plain adaptive k-NN on the full training set.
  const StoppingConfig stopping{1500, 3, true};
  std::size_t errors = 0;
  for (std::size_t i = 0; i < test.size(); ++i) {
    const auto p = predict(Method::Dann, std::span<const Shard>(&train, 1), test.features(i), stopping);
    errors += p.label != test.label(i) ? 1 : 0;
  }
  CHECK(result.cell("DANN", 0.0).rate == static_cast<double>(errors) / test.size());
  CHECK(result.cell("DANN", 0.0).m == 1);

  const double ones = std::accumulate(test.labels().begin(), test.labels().end(), 0.0);
  const double minority = std::min(ones, test.size() - ones) / test.size();
  const auto train_ones = std::accumulate(train.labels().begin(), train.labels().end(), 0.0);
  if ((train_ones >= train.size() / 2.0) == (ones >= test.size() / 2.0)) {
    CHECK(result.cell(kMajorityName, 0.0).rate == doctest::Approx(minority));
  }

  const auto repeat = evaluate_real(train, test, cfg, 1);
  CHECK(same_outcomes(result, repeat));
}

TEST_CASE("labeled CSV") {
  const auto train = write_temp("train.csv", "x,label,y\n0.1,1,0.2\n0.3,0,0.4\n\n");
  const auto table = read_labeled_csv(train, "label");
  CHECK(table.rows == 2);
  CHECK(table.feature_names == std::vector<std::string>{"x", "y"});
  CHECK(table.features == std::vector<double>{0.1, 0.2, 0.3, 0.4});
  CHECK(table.labels == std::vector<int>{1, 0});
  const auto shard = to_shard(table, 4);
  CHECK(shard.dim() == 2);
  CHECK(shard.label(0) == 1);

  const auto query = write_temp("query.csv", "y,x\n0.9,0.8\n");
  const auto q = read_labeled_csv(query, "label", table.feature_names);
  CHECK(q.features == std::vector<double>{0.8, 0.9});
  CHECK(q.labels.empty());
  CHECK_THROWS_AS(to_shard(q, 1), InvalidInput);

  CHECK_THROWS_AS(read_labeled_csv(write_temp("bad.csv", "x,label\n0.1,2\n"), "label"), InvalidInput);
  CHECK_THROWS_AS(read_labeled_csv(write_temp("bad2.csv", "x,label\nfoo,1\n"), "label"), InvalidInput);
  CHECK_THROWS_AS(read_labeled_csv(query, "label", {"z"}), InvalidInput);
}

TEST_CASE("results CSV and JSON") {
  ExperimentConfig cfg;
  cfg.total_size = 300;
  cfg.epsilons = {0.0, 0.5};
  cfg.runs = 3;
  cfg.methods = {Method::Dann, Method::D1nn};
  const auto result = run_experiment(cfg, 1);

  std::ostringstream csv;
  write_results_csv(csv, result);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "classifier,epsilon,m,agreement_rate,mc_stderr,mean_runtime_s,k1_min,k1_med,k1_max");
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 8);
  }
  CHECK(rows == 4);

  const auto json = results_to_json(result);
  CHECK(json["cells"].size() == 4);
  CHECK(json["config"]["N"] == 300);
  const auto back = config_from_json(json["config"]);
  CHECK(back.total_size == cfg.total_size);
  CHECK(back.epsilons == cfg.epsilons);
  CHECK(back.methods == cfg.methods);
  CHECK(back.seed == cfg.seed);
  CHECK(run_manifest("simulate", cfg, 2)["versions"]["dann"] == kVersion);
}
