#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fpcov/generator.hpp"

namespace fpcov {

/// Column order of the published comparison table.
const std::vector<std::string>& strategy_names();

/// One benchmark system: a model plus the published best suite sizes per
/// strategy. An absent value means the source table prints NA there.
struct BenchFixture {
  std::string name;  // "S1".."S14", or "F1" for the 16^4 narrative example
  std::string spec;  // model text, e.g. "3^4 t=2"
  std::vector<std::optional<int>> published;  // strategy_names() order

  SystemModel model() const;
  std::optional<int> published_for(const std::string& strategy) const;
  bool operator==(const BenchFixture&) const = default;
};

/// The full fixture set: S1..S14 plus F1.
const std::vector<BenchFixture>& bench_fixtures();

/// Lookup by name; throws ConfigError listing the valid names.
const BenchFixture& find_fixture(const std::string& name);

/// Systems cheap enough for a desk-scale default run.
std::vector<std::string> default_bench_systems();

/// All fourteen published systems (excludes F1).
std::vector<std::string> all_table1_systems();

struct BenchOptions {
  std::vector<std::string> systems = default_bench_systems();
  bool run_fpa = false;
  bool run_imfpa = true;
  int runs = 30;
  EngineConfig config;  // config.seed is ignored; base_seed drives seeding
  std::uint64_t base_seed = 1;
  int jobs = 1;
  /// Called with one human-readable line as each (system, engine) cell
  /// starts and finishes; may be empty.
  std::function<void(const std::string&)> on_progress;
};

/// Our measurements for one engine on one system.
struct BenchEngineRow {
  EngineKind engine = EngineKind::imfpa;
  RunSummary summary;
  /// Mean over runs of each run's success share per operator, in percent.
  double mean_global_success_pct = 0.0;
  double mean_local_success_pct = 0.0;
  /// Global attempts / all attempts, pooled over every run.
  double global_attempt_fraction = 0.0;
  double wall_seconds = 0.0;
};

struct BenchSystemResult {
  BenchFixture fixture;
  std::vector<BenchEngineRow> engines;
};

struct BenchReport {
  BenchOptions options;
  std::vector<BenchSystemResult> systems;
};

/// Runs every selected engine on every selected system, `runs` seeds each.
BenchReport run_bench(const BenchOptions& opts);

/// Fixed-width text table: published sizes side-by-side with measured
/// best/mean per engine, followed by the operator-split block.
std::string bench_table_text(const BenchReport& report);

/// Machine-readable form; published NA cells serialize as null.
nlohmann::ordered_json bench_to_json(const BenchReport& report);

}  // namespace fpcov
