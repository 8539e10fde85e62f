#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "fpcov/bench.hpp"
#include "fpcov/errors.hpp"

using namespace fpcov;

namespace {

// Independently transcribed copy of the published comparison table. The
// fixture data in the library must match this cell for cell; any edit to
// one side without the other is flagged as drift.
const char* kReferenceTable =
    "S1   3^4   t=2 | 12 NA 10 13 12 10 9 9 9 9 9 9 9 9 9\n"
    "S2   3^13  t=2 | 20 NA 22 20 20 19 16 17 17 17 18 NA NA 18 18\n"
    "S3   10^10 t=2 | 176 NA 177 170 189 160 NA 157 159 170 155 NA NA 153 151\n"
    "S4   5^5   t=4 | 908 837 810 773 731 625 NA NA NA 779 751 746 776 784 790\n"
    "S5   5^6   t=4 | 1239 1074 1072 1092 1027 625 NA NA NA 1001 990 967 991 988 988\n"
    "S6   5^7   t=4 | 1349 1248 1279 1320 1216 1125 NA NA NA 1209 1186 1151 1200 1164 1165\n"
    "S7   2^10  t=4 | 49 58 39 43 40 46 NA NA NA 34 37 36 28 36 36\n"
    "S8   3^10  t=4 | 241 336 221 231 228 224 NA NA NA 213 211 207 211 211 205\n"
    "S9   4^10  t=4 | 707 704 703 742 782 621 NA NA NA 685 691 668 698 661 657\n"
    "S10  2^10  t=2 | 10 6 10 NA 10 NA NA NA NA 8 7 8 8 8 8\n"
    "S11  2^10  t=3 | 19 18 18 NA 17 NA NA NA NA 17 16 16 16 16 16\n"
    "S12  2^10  t=4 | 49 58 39 NA 41 NA NA NA NA 37 37 36 36 35 37\n"
    "S13  2^10  t=5 | 128 NA 87 NA 84 NA NA NA NA 82 81 79 79 81 82\n"
    "S14  2^10  t=6 | 352 NA 169 NA 168 NA NA NA NA 158 158 153 157 158 153\n";

struct ReferenceRow {
  std::string name;
  std::string spec;
  std::vector<std::optional<int>> sizes;
};

std::vector<ReferenceRow> parse_reference() {
  std::vector<ReferenceRow> rows;
  std::istringstream in(kReferenceTable);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    ReferenceRow row;
    std::string base, t, bar, cell;
    cells >> row.name >> base >> t >> bar;
    row.spec = base + " " + t;
    while (cells >> cell) {
      if (cell == "NA")
        row.sizes.push_back(std::nullopt);
      else
        row.sizes.push_back(std::stoi(cell));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_CASE("strategy list: fifteen names, ours last") {
  const auto& names = strategy_names();
  REQUIRE(names.size() == 15);
  CHECK(names.front() == "IPOG");
  CHECK(names[10] == "HSS");
  CHECK(names.back() == "imFPA");
}

TEST_CASE("fixtures match the reference transcription cell for cell") {
  const auto reference = parse_reference();
  REQUIRE(reference.size() == 14);
  for (const ReferenceRow& ref : reference) {
    const BenchFixture& fixture = find_fixture(ref.name);
    INFO("system ", ref.name);
    CHECK(parse_model(fixture.spec) == parse_model(ref.spec));
    REQUIRE(fixture.published.size() == 15);
    CHECK(fixture.published == ref.sizes);
  }
}

TEST_CASE("every fixture model parses, including the settings example") {
  for (const BenchFixture& f : bench_fixtures()) {
    INFO("fixture ", f.name);
    CHECK_NOTHROW((void)f.model());
  }
  const BenchFixture& f1 = find_fixture("F1");
  CHECK(f1.model().exhaustive_size() == 65536);
  for (const auto& v : f1.published) CHECK(!v.has_value());
}

TEST_CASE("published lookups by strategy name") {
  CHECK(find_fixture("S14").published_for("imFPA") == 153);
  CHECK(find_fixture("S1").published_for("IPOG") == 12);
  CHECK(find_fixture("S10").published_for("PICT") == std::nullopt);
  CHECK_THROWS_AS(find_fixture("S1").published_for("QSCA"), ConfigError);
  CHECK_THROWS_AS(find_fixture("S99"), ConfigError);
}

TEST_CASE("system selections") {
  CHECK(default_bench_systems() ==
        std::vector<std::string>{"S1", "S10", "S11"});
  const auto all = all_table1_systems();
  REQUIRE(all.size() == 14);
  CHECK(all.front() == "S1");
  CHECK(all.back() == "S14");
}

TEST_CASE("bench options are validated") {
  BenchOptions opts;
  opts.runs = 0;
  CHECK_THROWS_AS(run_bench(opts), ConfigError);
  opts.runs = 1;
  opts.run_imfpa = false;
  CHECK_THROWS_AS(run_bench(opts), ConfigError);
  opts.systems = {"S1", "bogus"};
  opts.run_imfpa = true;
  CHECK_THROWS_AS(run_bench(opts), ConfigError);
}

TEST_CASE("a small bench run produces a coherent report") {
  BenchOptions opts;
  opts.systems = {"S1"};
  opts.run_fpa = true;
  opts.run_imfpa = true;
  opts.runs = 2;
  opts.config.population = 20;
  opts.config.max_generations = 20;
  opts.base_seed = 3;

  int progress_lines = 0;
  opts.on_progress = [&](const std::string&) { ++progress_lines; };

  const BenchReport report = run_bench(opts);
  REQUIRE(report.systems.size() == 1);
  REQUIRE(report.systems[0].engines.size() == 2);
  CHECK(progress_lines == 4);  // start + finish per engine

  for (const BenchEngineRow& row : report.systems[0].engines) {
    CHECK(row.summary.sizes.size() == 2);
    CHECK(row.summary.min_size >= 9);  // can't beat the optimum
    CHECK(row.summary.min_size <= row.summary.max_size);
    CHECK(row.wall_seconds > 0.0);
    CHECK(row.global_attempt_fraction >= 0.0);
    CHECK(row.global_attempt_fraction <= 1.0);
  }
  // imFPA attempts both operators equally by construction.
  const BenchEngineRow& imfpa = report.systems[0].engines[1];
  CHECK(imfpa.engine == EngineKind::imfpa);
  std::uint64_t g = 0, l = 0;
  for (const OperatorStats& s : imfpa.summary.run_totals) {
    g += s.global_attempts;
    l += s.local_attempts;
  }
  CHECK(g == l);

  const std::string table = bench_table_text(report);
  CHECK(table.find("S1") != std::string::npos);
  CHECK(table.find("imfpa best") != std::string::npos);
  CHECK(table.find("Operator split") != std::string::npos);

  const auto doc = bench_to_json(report);
  CHECK(doc["systems"][0]["published"]["ITCH"].is_null());  // NA -> null
  CHECK(doc["systems"][0]["published"]["IPOG"] == 12);
  CHECK(doc["systems"][0]["engines"].size() == 2);
}
