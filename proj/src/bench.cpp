#include "fpcov/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "fpcov/errors.hpp"

namespace fpcov {

namespace {

constexpr std::optional<int> NA = std::nullopt;

std::vector<BenchFixture> make_fixtures() {
  // Published best suite sizes, one column per strategy_names() entry.
  // NA marks cells the source table leaves blank.
  return {
      {"S1", "3^4 t=2", {12, NA, 10, 13, 12, 10, 9, 9, 9, 9, 9, 9, 9, 9, 9}},
      {"S2", "3^13 t=2",
       {20, NA, 22, 20, 20, 19, 16, 17, 17, 17, 18, NA, NA, 18, 18}},
      {"S3", "10^10 t=2",
       {176, NA, 177, 170, 189, 160, NA, 157, 159, 170, 155, NA, NA, 153,
        151}},
      {"S4", "5^5 t=4",
       {908, 837, 810, 773, 731, 625, NA, NA, NA, 779, 751, 746, 776, 784,
        790}},
      {"S5", "5^6 t=4",
       {1239, 1074, 1072, 1092, 1027, 625, NA, NA, NA, 1001, 990, 967, 991,
        988, 988}},
      {"S6", "5^7 t=4",
       {1349, 1248, 1279, 1320, 1216, 1125, NA, NA, NA, 1209, 1186, 1151,
        1200, 1164, 1165}},
      {"S7", "2^10 t=4",
       {49, 58, 39, 43, 40, 46, NA, NA, NA, 34, 37, 36, 28, 36, 36}},
      {"S8", "3^10 t=4",
       {241, 336, 221, 231, 228, 224, NA, NA, NA, 213, 211, 207, 211, 211,
        205}},
      {"S9", "4^10 t=4",
       {707, 704, 703, 742, 782, 621, NA, NA, NA, 685, 691, 668, 698, 661,
        657}},
      {"S10", "2^10 t=2",
       {10, 6, 10, NA, 10, NA, NA, NA, NA, 8, 7, 8, 8, 8, 8}},
      {"S11", "2^10 t=3",
       {19, 18, 18, NA, 17, NA, NA, NA, NA, 17, 16, 16, 16, 16, 16}},
      {"S12", "2^10 t=4",
       {49, 58, 39, NA, 41, NA, NA, NA, NA, 37, 37, 36, 36, 35, 37}},
      {"S13", "2^10 t=5",
       {128, NA, 87, NA, 84, NA, NA, NA, NA, 82, 81, 79, 79, 81, 82}},
      {"S14", "2^10 t=6",
       {352, NA, 169, NA, 168, NA, NA, NA, NA, 158, 158, 153, 157, 158,
        153}},
      // The 4-component, 16-value settings-screen example; no published
      // strategy sizes exist for it.
      {"F1", "16^4 t=2", std::vector<std::optional<int>>(15, NA)},
  };
}

}  // namespace

const std::vector<std::string>& strategy_names() {
  // "HSS" is the published table's own spelling.
  static const std::vector<std::string> names = {
      "IPOG", "ITCH", "Jenny", "PICT", "TVG", "GTWay", "SA", "GA",
      "ACA",  "PSO",  "HSS",   "HHH",  "CS",  "FPA",   "imFPA"};
  return names;
}

SystemModel BenchFixture::model() const { return parse_model(spec); }

std::optional<int> BenchFixture::published_for(
    const std::string& strategy) const {
  const auto& names = strategy_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == strategy) return published[i];
  throw ConfigError("unknown strategy: " + strategy);
}

const std::vector<BenchFixture>& bench_fixtures() {
  static const std::vector<BenchFixture> fixtures = make_fixtures();
  return fixtures;
}

const BenchFixture& find_fixture(const std::string& name) {
  for (const BenchFixture& f : bench_fixtures())
    if (f.name == name) return f;
  std::string known;
  for (const BenchFixture& f : bench_fixtures()) {
    if (!known.empty()) known += ", ";
    known += f.name;
  }
  throw ConfigError("unknown benchmark system '" + name + "' (known: " +
                    known + ")");
}

std::vector<std::string> default_bench_systems() { return {"S1", "S10", "S11"}; }

std::vector<std::string> all_table1_systems() {
  std::vector<std::string> names;
  for (const BenchFixture& f : bench_fixtures())
    if (f.name != "F1") names.push_back(f.name);
  return names;
}

BenchReport run_bench(const BenchOptions& opts) {
  if (opts.runs < 1) throw ConfigError("bench runs must be at least 1");
  if (!opts.run_fpa && !opts.run_imfpa)
    throw ConfigError("bench needs at least one engine selected");

  std::vector<EngineKind> engines;
  if (opts.run_fpa) engines.push_back(EngineKind::fpa);
  if (opts.run_imfpa) engines.push_back(EngineKind::imfpa);

  BenchReport report;
  report.options = opts;

  for (const std::string& name : opts.systems) {
    BenchSystemResult result;
    result.fixture = find_fixture(name);
    const SystemModel model = result.fixture.model();

    for (EngineKind engine : engines) {
      if (opts.on_progress)
        opts.on_progress(result.fixture.name + " " + to_string(engine) +
                         ": " + std::to_string(opts.runs) + " run(s)...");

      const auto start = std::chrono::steady_clock::now();
      BestOfRuns best = best_of_runs(model, engine, opts.config, opts.runs,
                                     opts.base_seed, opts.jobs);

      BenchEngineRow row;
      row.engine = engine;
      row.summary = best.summary;
      row.wall_seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();

      std::uint64_t global_attempts = 0, all_attempts = 0;
      for (const OperatorStats& s : best.summary.run_totals) {
        row.mean_global_success_pct += s.global_pct();
        row.mean_local_success_pct += s.local_pct();
        global_attempts += s.global_attempts;
        all_attempts += s.global_attempts + s.local_attempts;
      }
      row.mean_global_success_pct /= static_cast<double>(opts.runs);
      row.mean_local_success_pct /= static_cast<double>(opts.runs);
      row.global_attempt_fraction =
          all_attempts == 0 ? 0.0
                            : static_cast<double>(global_attempts) /
                                  static_cast<double>(all_attempts);

      if (opts.on_progress) {
        std::ostringstream line;
        line << result.fixture.name << ' ' << to_string(engine)
             << ": best " << best.summary.min_size << ", mean "
             << std::fixed << std::setprecision(2) << best.summary.mean_size
             << " (" << std::setprecision(1) << row.wall_seconds << "s)";
        opts.on_progress(line.str());
      }

      result.engines.push_back(std::move(row));
    }
    report.systems.push_back(std::move(result));
  }
  return report;
}

namespace {

std::string cell(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "NA";
}

std::string fixed(double v, int places) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(places) << v;
  return out.str();
}

void append_row(std::string& out, const std::vector<std::string>& cells,
                const std::vector<std::size_t>& widths) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += "  ";
    // Right-align numbers under their headers; first two columns are text.
    const std::size_t pad = widths[i] > cells[i].size()
                                ? widths[i] - cells[i].size()
                                : 0;
    if (i < 2) {
      out += cells[i] + std::string(pad, ' ');
    } else {
      out += std::string(pad, ' ') + cells[i];
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  out += '\n';
}

}  // namespace

std::string bench_table_text(const BenchReport& report) {
  const auto& strategies = strategy_names();

  // Header: system, model, all published columns, then measured columns.
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"System", "Model"};
  header.insert(header.end(), strategies.begin(), strategies.end());
  std::vector<EngineKind> engines;
  for (const BenchSystemResult& sys : report.systems) {
    for (const BenchEngineRow& row : sys.engines)
      if (std::find(engines.begin(), engines.end(), row.engine) ==
          engines.end())
        engines.push_back(row.engine);
  }
  for (EngineKind e : engines) {
    header.push_back(to_string(e) + " best");
    header.push_back(to_string(e) + " mean");
  }
  rows.push_back(header);

  for (const BenchSystemResult& sys : report.systems) {
    std::vector<std::string> row = {sys.fixture.name, sys.fixture.spec};
    for (const auto& v : sys.fixture.published) row.push_back(cell(v));
    for (EngineKind e : engines) {
      auto it = std::find_if(
          sys.engines.begin(), sys.engines.end(),
          [e](const BenchEngineRow& r) { return r.engine == e; });
      if (it == sys.engines.end()) {
        row.push_back("-");
        row.push_back("-");
      } else {
        row.push_back(std::to_string(it->summary.min_size));
        row.push_back(fixed(it->summary.mean_size, 2));
      }
    }
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> widths(rows[0].size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());

  std::string out;
  out += "Published best sizes vs. this implementation (best of " +
         std::to_string(report.options.runs) + " run(s), population " +
         std::to_string(report.options.config.population) + ", generations " +
         std::to_string(report.options.config.max_generations) + ")\n\n";
  for (const auto& row : rows) append_row(out, row, widths);

  // Operator behaviour: how attempts were split and which operator
  // produced the accepted improvements.
  out += "\nOperator split (success % averaged over runs; attempt share pooled)\n\n";
  std::vector<std::vector<std::string>> op_rows;
  op_rows.push_back({"System", "Engine", "global succ %", "local succ %",
                     "global attempt share"});
  for (const BenchSystemResult& sys : report.systems) {
    for (const BenchEngineRow& row : sys.engines) {
      op_rows.push_back({sys.fixture.name, to_string(row.engine),
                         fixed(row.mean_global_success_pct, 2),
                         fixed(row.mean_local_success_pct, 2),
                         fixed(row.global_attempt_fraction, 4)});
    }
  }
  std::vector<std::size_t> op_widths(op_rows[0].size(), 0);
  for (const auto& row : op_rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      op_widths[i] = std::max(op_widths[i], row[i].size());
  for (const auto& row : op_rows) append_row(out, row, op_widths);

  return out;
}

nlohmann::ordered_json bench_to_json(const BenchReport& report) {
  using nlohmann::ordered_json;
  const EngineConfig& cfg = report.options.config;

  ordered_json doc;
  doc["schema_version"] = 1;
  doc["options"] = {{"systems", report.options.systems},
                    {"fpa", report.options.run_fpa},
                    {"imfpa", report.options.run_imfpa},
                    {"runs", report.options.runs},
                    {"population", cfg.population},
                    {"max_generations", cfg.max_generations},
                    {"switch_p", cfg.switch_p},
                    {"base_seed", report.options.base_seed}};

  ordered_json systems = ordered_json::array();
  for (const BenchSystemResult& sys : report.systems) {
    ordered_json published;
    const auto& strategies = strategy_names();
    for (std::size_t i = 0; i < strategies.size(); ++i) {
      if (sys.fixture.published[i])
        published[strategies[i]] = *sys.fixture.published[i];
      else
        published[strategies[i]] = nullptr;
    }

    ordered_json engines = ordered_json::array();
    for (const BenchEngineRow& row : sys.engines) {
      engines.push_back(
          {{"engine", to_string(row.engine)},
           {"best_size", row.summary.min_size},
           {"mean_size", row.summary.mean_size},
           {"max_size", row.summary.max_size},
           {"stddev_size", row.summary.stddev_size},
           {"best_run", row.summary.best_run},
           {"sizes", row.summary.sizes},
           {"mean_global_success_pct", row.mean_global_success_pct},
           {"mean_local_success_pct", row.mean_local_success_pct},
           {"global_attempt_fraction", row.global_attempt_fraction},
           {"wall_seconds", row.wall_seconds}});
    }

    systems.push_back({{"name", sys.fixture.name},
                       {"model", sys.fixture.spec},
                       {"published", std::move(published)},
                       {"engines", std::move(engines)}});
  }
  doc["systems"] = std::move(systems);
  return doc;
}

}  // namespace fpcov
