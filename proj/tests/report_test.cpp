#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "fpcov/errors.hpp"
#include "fpcov/generator.hpp"
#include "fpcov/report.hpp"

#include "test_util.hpp"

using namespace fpcov;
using nlohmann::ordered_json;

namespace {

RunReport sample_report() {
  EngineConfig cfg;
  cfg.population = 25;
  cfg.max_generations = 25;
  cfg.seed = 13;
  return generate(parse_model("3^4 t=2"), EngineKind::imfpa, cfg);
}

TestSuite tiny_suite() {
  TestSuite suite;
  suite.model = parse_model("2^2 2^1 t=2");
  suite.tests = {TestCase{{0, 1, 0}}, TestCase{{1, 0, 1}}};
  return suite;
}

}  // namespace

TEST_CASE("reports survive a JSON round trip byte-for-byte") {
  const RunReport report = sample_report();

  RunSummary summary;
  summary.runs = 3;
  summary.base_seed = 13;
  summary.best_run = 1;
  summary.min_size = report.suite.size();
  summary.max_size = report.suite.size() + 2;
  summary.mean_size = static_cast<double>(report.suite.size()) + 0.5;
  summary.stddev_size = 0.25;
  summary.sizes = {report.suite.size() + 2, report.suite.size(),
                   report.suite.size() + 1};

  const ordered_json first = report_to_json(report, &summary);
  RunSummary parsed_summary;
  const RunReport parsed = report_from_json(first, &parsed_summary);
  const ordered_json second = report_to_json(parsed, &parsed_summary);
  CHECK(first.dump(2) == second.dump(2));

  CHECK(parsed.suite == report.suite);
  CHECK(parsed.config == report.config);
  CHECK(parsed.totals == report.totals);
  CHECK(parsed.per_test_stats == report.per_test_stats);
  CHECK(parsed_summary.sizes == summary.sizes);
  CHECK(parsed_summary.best_run == summary.best_run);
}

TEST_CASE("field order is pinned: version first, wall time last") {
  const ordered_json doc = report_to_json(sample_report());
  REQUIRE(!doc.empty());
  CHECK(doc.begin().key() == "schema_version");
  auto last = doc.end();
  --last;
  CHECK(last.key() == "wall_seconds");
}

TEST_CASE("wall time is the only field allowed to differ between runs") {
  EngineConfig cfg;
  cfg.population = 25;
  cfg.max_generations = 25;
  cfg.seed = 13;
  const SystemModel m = parse_model("3^4 t=2");
  ordered_json a = report_to_json(generate(m, EngineKind::imfpa, cfg));
  ordered_json b = report_to_json(generate(m, EngineKind::imfpa, cfg));
  a.erase("wall_seconds");
  b.erase("wall_seconds");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("unsupported schema versions and missing fields are named") {
  ordered_json doc = report_to_json(sample_report());
  doc["schema_version"] = 999;
  CHECK_THROWS_WITH_AS(report_from_json(doc),
                       "unsupported report schema_version 999", ConfigError);

  doc = report_to_json(sample_report());
  doc.erase("totals");
  try {
    report_from_json(doc);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("totals") != std::string::npos);
  }

  doc = report_to_json(sample_report());
  doc["config"]["population"] = "lots";
  CHECK_THROWS_AS(report_from_json(doc), ConfigError);

  doc = report_to_json(sample_report());
  doc["suite"]["size"] = 12345;
  CHECK_THROWS_AS(report_from_json(doc), ConfigError);
}

TEST_CASE("CSV output matches the documented shape exactly") {
  CHECK(suite_to_csv(tiny_suite()) ==
        "p0,p1,p2\n"
        "0,1,0\n"
        "1,0,1\n");
}

TEST_CASE("CSV value naming substitutes and validates") {
  const TestSuite suite = tiny_suite();
  const std::vector<std::vector<std::string>> names = {
      {"off", "on"}, {"no", "yes"}, {"low", "high"}};
  CHECK(suite_to_csv(suite, names) ==
        "p0,p1,p2\n"
        "off,yes,low\n"
        "on,no,high\n");

  CHECK_THROWS_AS(suite_to_csv(suite, {{"off", "on"}, {"no", "yes"}}),
                  ConfigError);
  CHECK_THROWS_AS(
      suite_to_csv(suite, {{"off"}, {"no", "yes"}, {"low", "high"}}),
      ConfigError);
}

TEST_CASE("names files parse with comments and surplus names") {
  const std::string path = "report_test_tmp.names";
  {
    std::ofstream out(path);
    out << "# power states\n"
        << "off, on\n"
        << "no,yes,maybe\n"   // surplus third name is fine
        << "low , high\n";    // padding stripped
  }
  const auto names = parse_names_file(path, tiny_suite().model);
  REQUIRE(names.size() == 3);
  CHECK(names[0] == std::vector<std::string>{"off", "on"});
  CHECK(names[1] == std::vector<std::string>{"no", "yes", "maybe"});
  CHECK(names[2] == std::vector<std::string>{"low", "high"});
  std::remove(path.c_str());

  CHECK_THROWS_AS(parse_names_file("missing.names", tiny_suite().model),
                  ConfigError);

  {
    std::ofstream out(path);
    out << "off,on\n";  // one line, model needs three
  }
  CHECK_THROWS_AS(parse_names_file(path, tiny_suite().model), ConfigError);
  std::remove(path.c_str());
}
