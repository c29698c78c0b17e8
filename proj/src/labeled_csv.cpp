#include "dann/labeled_csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace dann {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n\"");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\"");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double to_number(const std::string& s, const std::filesystem::path& path, std::size_t line) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw InvalidInput(path.string() + ":" + std::to_string(line) + ": not a number: '" + s + "'");
  }
  return value;
}

}  // namespace

LabeledTable read_labeled_csv(const std::filesystem::path& path, const std::string& label_column,
                              const std::vector<std::string>& feature_order) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw InvalidInput(path.string() + ": missing header row");
  const auto header = split(line);

  std::optional<std::size_t> label_index;
  std::vector<std::size_t> feature_index;
  LabeledTable table;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == label_column) {
      label_index = c;
    } else if (feature_order.empty()) {
      feature_index.push_back(c);
      table.feature_names.push_back(header[c]);
    }
  }
  if (!feature_order.empty()) {
    for (const auto& name : feature_order) {
      const auto it = std::find(header.begin(), header.end(), name);
      if (it == header.end()) throw InvalidInput(path.string() + ": missing column '" + name + "'");
      feature_index.push_back(static_cast<std::size_t>(it - header.begin()));
    }
    table.feature_names = feature_order;
  }
  if (feature_index.empty()) throw InvalidInput(path.string() + ": no feature columns");

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(line);
    if (fields.size() != header.size()) {
      throw InvalidInput(path.string() + ":" + std::to_string(line_no) + ": expected " +
                         std::to_string(header.size()) + " fields");
    }
    for (auto c : feature_index) table.features.push_back(to_number(fields[c], path, line_no));
    if (label_index) {
      const double y = to_number(fields[*label_index], path, line_no);
      if (y != 0.0 && y != 1.0) {
        throw InvalidInput(path.string() + ":" + std::to_string(line_no) + ": label must be 0 or 1");
      }
      table.labels.push_back(static_cast<int>(y));
    }
    ++table.rows;
  }
  return table;
}

Shard to_shard(const LabeledTable& table, int shard_id) {
  if (table.labels.size() != table.rows) throw InvalidInput("table has no label column");
  std::vector<std::uint8_t> labels(table.labels.begin(), table.labels.end());
  return Shard(shard_id, table.feature_names.size(), table.features, std::move(labels));
}

}  // namespace dann
