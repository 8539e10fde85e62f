#pragma once

#include <cstdint>
#include <vector>

#include "fpcov/engine.hpp"
#include "fpcov/model.hpp"

namespace fpcov {

/// A complete covering suite for its model: replaying mark_covered over
/// all tests on a fresh tracker leaves nothing uncovered.
struct TestSuite {
  SystemModel model;
  std::vector<TestCase> tests;

  std::size_t size() const { return tests.size(); }
  bool operator==(const TestSuite&) const = default;
};

/// Everything one generation run produced. wall_seconds is the only field
/// excluded from the determinism contract.
struct RunReport {
  TestSuite suite;
  EngineKind engine = EngineKind::imfpa;
  EngineConfig config;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  std::vector<OperatorStats> per_test_stats;  // one entry per accepted test
  OperatorStats totals;                       // sum of per_test_stats
};

/// One-test-at-a-time outer loop: evolve a best test for the current
/// coverage state, append it, remove what it covers, repeat until nothing
/// is uncovered. Deterministic given (model, engine, cfg). Zero-fitness
/// best pollen are discarded, bounded by cfg.stall_limit (StallError).
RunReport generate(const SystemModel& model, EngineKind engine,
                   const EngineConfig& cfg);

struct RunSummary {
  int runs = 0;
  std::uint64_t base_seed = 0;
  int best_run = 0;  // index of the run reported as best
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  double mean_size = 0.0;
  double stddev_size = 0.0;  // population stddev over runs
  std::vector<std::size_t> sizes;         // per run, in run order
  std::vector<OperatorStats> run_totals;  // per run, in run order
};

struct BestOfRuns {
  RunReport best;
  RunSummary summary;
};

/// `runs` independent generate() calls seeded base_seed + run index, so any
/// single run can be reproduced in isolation. Returns the smallest suite
/// (ties: lowest run index). jobs > 1 distributes runs over that many
/// threads; per-run results are identical either way. Per-run errors are
/// rethrown annotated with the run index and seed.
BestOfRuns best_of_runs(const SystemModel& model, EngineKind engine,
                        EngineConfig cfg, int runs, std::uint64_t base_seed,
                        int jobs = 1);

}  // namespace fpcov
