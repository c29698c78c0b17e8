#include "dann/report.hpp"

#include <iomanip>

namespace dann {

void write_results_csv(std::ostream& out, const ExperimentResult& result) {
  const char* metric = result.metric == Metric::BayesAgreement ? "agreement_rate" : "error_rate";
  out << "classifier,epsilon,m," << metric << ",mc_stderr,mean_runtime_s,k1_min,k1_med,k1_max\n";
  out << std::setprecision(10);
  for (const auto& c : result.cells) {
    out << c.classifier << ',' << c.epsilon << ',' << c.m << ',' << c.rate << ',' << c.mc_stderr
        << ',' << c.mean_runtime_s << ',';
    if (c.k1) {
      out << c.k1->min << ',' << c.k1->median << ',' << c.k1->max;
    } else {
      out << ",,";
    }
    out << '\n';
  }
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::json methods = nlohmann::json::array();
  for (Method m : cfg.methods) methods.push_back(std::string(to_string(m)));
  return {{"N", cfg.total_size},
          {"kappa", cfg.kappa},
          {"epsilons", cfg.epsilons},
          {"split", std::string(to_string(cfg.split))},
          {"runs", cfg.runs},
          {"seed", cfg.seed},
          {"classifiers", methods},
          {"queries_per_run", cfg.queries_per_run},
          {"include_log_in_bound", cfg.include_log_in_bound},
          {"dim", cfg.dim}};
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig cfg;
  cfg.total_size = j.value("N", cfg.total_size);
  cfg.kappa = j.value("kappa", cfg.kappa);
  cfg.epsilons = j.value("epsilons", cfg.epsilons);
  if (j.contains("split")) cfg.split = parse_split_mode(j.at("split").get<std::string>());
  cfg.runs = j.value("runs", cfg.runs);
  cfg.seed = j.value("seed", cfg.seed);
  if (j.contains("classifiers")) {
    cfg.methods.clear();
    for (const auto& name : j.at("classifiers")) {
      cfg.methods.push_back(parse_method(name.get<std::string>()));
    }
  }
  cfg.queries_per_run = j.value("queries_per_run", cfg.queries_per_run);
  cfg.include_log_in_bound = j.value("include_log_in_bound", cfg.include_log_in_bound);
  cfg.dim = j.value("dim", cfg.dim);
  return cfg;
}

nlohmann::json results_to_json(const ExperimentResult& result) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : result.cells) {
    nlohmann::json cell = {{"classifier", c.classifier},
                           {"epsilon", c.epsilon},
                           {"m", c.m},
                           {"runs", c.runs},
                           {"failures", c.failures},
                           {"rate", c.rate},
                           {"mc_stderr", c.mc_stderr},
                           {"positive_rate", c.positive_rate},
                           {"mean_runtime_s", c.mean_runtime_s}};
    if (c.k1) {
      cell["k1"] = {{"min", c.k1->min}, {"median", c.k1->median}, {"max", c.k1->max}};
    }
    cells.push_back(std::move(cell));
  }
  return {{"metric", result.metric == Metric::BayesAgreement ? "bayes_agreement" : "test_error"},
          {"config", config_to_json(result.config)},
          {"cells", cells}};
}

nlohmann::json run_manifest(const std::string& command, const ExperimentConfig& cfg,
                            unsigned threads) {
  return {{"command", command},
          {"config", config_to_json(cfg)},
          {"seed", cfg.seed},
          {"threads", threads},
          {"versions",
           {{"dann", kVersion},
            {"compiler", __VERSION__},
            {"cplusplus", __cplusplus},
            {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                  std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                  std::to_string(NLOHMANN_JSON_VERSION_PATCH)}}}};
}

}  // namespace dann
