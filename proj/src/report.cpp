#include "fpcov/report.hpp"

#include <fstream>
#include <sstream>

#include "fpcov/errors.hpp"

namespace fpcov {

namespace {

using nlohmann::ordered_json;

ordered_json stats_to_json(const OperatorStats& s) {
  return ordered_json{{"global_attempts", s.global_attempts},
                      {"global_successes", s.global_successes},
                      {"local_attempts", s.local_attempts},
                      {"local_successes", s.local_successes}};
}

// Type-checked field access so a malformed document names its bad field
// instead of surfacing a bare json exception.
const ordered_json& field(const ordered_json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw ConfigError(std::string("report is missing field '") + key + "'");
  return *it;
}

template <typename T>
T field_as(const ordered_json& obj, const char* key) {
  try {
    return field(obj, key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("report field '") + key +
                      "' has the wrong type");
  }
}

OperatorStats stats_from_json(const ordered_json& obj) {
  OperatorStats s;
  s.global_attempts = field_as<std::uint64_t>(obj, "global_attempts");
  s.global_successes = field_as<std::uint64_t>(obj, "global_successes");
  s.local_attempts = field_as<std::uint64_t>(obj, "local_attempts");
  s.local_successes = field_as<std::uint64_t>(obj, "local_successes");
  return s;
}

}  // namespace

ordered_json report_to_json(const RunReport& report,
                            const RunSummary* summary) {
  const EngineConfig& cfg = report.config;

  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["engine"] = to_string(report.engine);
  doc["model"] = {{"cardinalities", report.suite.model.cardinalities},
                  {"strength", report.suite.model.strength}};
  doc["seed"] = report.seed;
  doc["config"] = {{"population", cfg.population},
                   {"max_generations", cfg.max_generations},
                   {"switch_p", cfg.switch_p},
                   {"accept_scale", cfg.accept_scale},
                   {"levy_beta", cfg.levy.beta},
                   {"levy_scale", cfg.levy.scale},
                   {"seed", cfg.seed},
                   {"stall_limit", cfg.stall_limit},
                   {"tuple_memory_budget", cfg.tuple_memory_budget},
                   {"persistent_success", cfg.persistent_success}};

  ordered_json tests = ordered_json::array();
  for (const TestCase& t : report.suite.tests) tests.push_back(t.values);
  doc["suite"] = {{"size", report.suite.size()}, {"tests", std::move(tests)}};

  ordered_json per_test = ordered_json::array();
  for (const OperatorStats& s : report.per_test_stats)
    per_test.push_back(stats_to_json(s));
  doc["per_test_stats"] = std::move(per_test);
  doc["totals"] = stats_to_json(report.totals);

  if (summary) {
    doc["runs_summary"] = {{"runs", summary->runs},
                           {"base_seed", summary->base_seed},
                           {"best_run", summary->best_run},
                           {"min_size", summary->min_size},
                           {"mean_size", summary->mean_size},
                           {"max_size", summary->max_size},
                           {"stddev_size", summary->stddev_size},
                           {"sizes", summary->sizes}};
  }

  doc["wall_seconds"] = report.wall_seconds;
  return doc;
}

RunReport report_from_json(const ordered_json& doc, RunSummary* summary_out) {
  const int version = field_as<int>(doc, "schema_version");
  if (version != kReportSchemaVersion)
    throw ConfigError("unsupported report schema_version " +
                      std::to_string(version));

  RunReport report;
  report.engine = engine_from_string(field_as<std::string>(doc, "engine"));

  const ordered_json& model = field(doc, "model");
  report.suite.model.cardinalities =
      field_as<std::vector<int>>(model, "cardinalities");
  report.suite.model.strength = field_as<int>(model, "strength");

  report.seed = field_as<std::uint64_t>(doc, "seed");

  const ordered_json& cfg = field(doc, "config");
  report.config.population = field_as<int>(cfg, "population");
  report.config.max_generations = field_as<int>(cfg, "max_generations");
  report.config.switch_p = field_as<double>(cfg, "switch_p");
  report.config.accept_scale = field_as<double>(cfg, "accept_scale");
  report.config.levy.beta = field_as<double>(cfg, "levy_beta");
  report.config.levy.scale = field_as<double>(cfg, "levy_scale");
  report.config.seed = field_as<std::uint64_t>(cfg, "seed");
  report.config.stall_limit = field_as<int>(cfg, "stall_limit");
  report.config.tuple_memory_budget =
      field_as<std::uint64_t>(cfg, "tuple_memory_budget");
  report.config.persistent_success = field_as<bool>(cfg, "persistent_success");

  const ordered_json& suite = field(doc, "suite");
  const auto rows = field_as<std::vector<std::vector<int>>>(suite, "tests");
  for (const auto& row : rows) report.suite.tests.push_back(TestCase{row});
  if (field_as<std::size_t>(suite, "size") != report.suite.size())
    throw ConfigError("report suite size does not match its test list");

  for (const ordered_json& s : field(doc, "per_test_stats"))
    report.per_test_stats.push_back(stats_from_json(s));
  report.totals = stats_from_json(field(doc, "totals"));

  if (summary_out && doc.contains("runs_summary")) {
    const ordered_json& rs = field(doc, "runs_summary");
    summary_out->runs = field_as<int>(rs, "runs");
    summary_out->base_seed = field_as<std::uint64_t>(rs, "base_seed");
    summary_out->best_run = field_as<int>(rs, "best_run");
    summary_out->min_size = field_as<std::size_t>(rs, "min_size");
    summary_out->mean_size = field_as<double>(rs, "mean_size");
    summary_out->max_size = field_as<std::size_t>(rs, "max_size");
    summary_out->stddev_size = field_as<double>(rs, "stddev_size");
    summary_out->sizes = field_as<std::vector<std::size_t>>(rs, "sizes");
  }

  report.wall_seconds = field_as<double>(doc, "wall_seconds");
  return report;
}

std::string suite_to_csv(const TestSuite& suite) {
  std::ostringstream out;
  const std::size_t k = suite.model.cardinalities.size();
  for (std::size_t i = 0; i < k; ++i) out << (i ? "," : "") << 'p' << i;
  out << '\n';
  for (const TestCase& t : suite.tests) {
    for (std::size_t i = 0; i < k; ++i)
      out << (i ? "," : "") << t.values[i];
    out << '\n';
  }
  return out.str();
}

std::string suite_to_csv(const TestSuite& suite,
                         const std::vector<std::vector<std::string>>& names) {
  const std::size_t k = suite.model.cardinalities.size();
  if (names.size() != k)
    throw ConfigError("value names cover " + std::to_string(names.size()) +
                      " parameters, model has " + std::to_string(k));
  for (std::size_t i = 0; i < k; ++i) {
    const auto need =
        static_cast<std::size_t>(suite.model.cardinalities[i]);
    if (names[i].size() < need)
      throw ConfigError("parameter " + std::to_string(i) + " needs " +
                        std::to_string(need) + " value names, got " +
                        std::to_string(names[i].size()));
  }

  std::ostringstream out;
  for (std::size_t i = 0; i < k; ++i) out << (i ? "," : "") << 'p' << i;
  out << '\n';
  for (const TestCase& t : suite.tests) {
    for (std::size_t i = 0; i < k; ++i)
      out << (i ? "," : "")
          << names[i][static_cast<std::size_t>(t.values[i])];
    out << '\n';
  }
  return out.str();
}

std::vector<std::vector<std::string>> parse_names_file(
    const std::string& path, const SystemModel& model) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open names file: " + path);

  std::vector<std::vector<std::string>> names;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::vector<std::string> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      // Trim surrounding whitespace; empty names are caller error.
      const auto b = cell.find_first_not_of(" \t\r");
      const auto e = cell.find_last_not_of(" \t\r");
      row.push_back(b == std::string::npos
                        ? std::string{}
                        : cell.substr(b, e - b + 1));
    }
    names.push_back(std::move(row));
  }

  if (names.size() != model.cardinalities.size())
    throw ConfigError("names file " + path + " has " +
                      std::to_string(names.size()) + " parameter lines, model has " +
                      std::to_string(model.cardinalities.size()));
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto need = static_cast<std::size_t>(model.cardinalities[i]);
    if (names[i].size() < need)
      throw ConfigError("names file line for parameter " + std::to_string(i) +
                        " lists " + std::to_string(names[i].size()) +
                        " names, parameter has " + std::to_string(need) +
                        " values");
  }
  return names;
}

}  // namespace fpcov
