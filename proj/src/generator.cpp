#include "fpcov/generator.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "fpcov/coverage.hpp"
#include "fpcov/errors.hpp"
#include "fpcov/rng.hpp"

namespace fpcov {

RunReport generate(const SystemModel& model, EngineKind engine,
                   const EngineConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();

  CoverageTracker tracker(model, cfg.tuple_memory_budget);
  Rng rng(cfg.seed);

  RunReport report;
  report.suite.model = model;
  report.engine = engine;
  report.config = cfg;
  report.seed = cfg.seed;

  int stalled = 0;
  while (tracker.remaining() > 0) {
    // With persistent success counters the acceptance schedule tightens
    // across the whole run instead of resetting for each test. Only the
    // imFPA acceptance rule consumes them; FPA is purely greedy.
    OperatorStats carry;
    if (cfg.persistent_success) carry = report.totals;

    EvolveResult result = engine == EngineKind::imfpa
                              ? evolve_imfpa(tracker, cfg, rng, carry)
                              : evolve_fpa(tracker, cfg, rng);

    if (result.best.fitness <= 0) {
      // A wasted evolve: nothing new covered, stats discarded.
      if (++stalled >= cfg.stall_limit) {
        throw StallError("no progress after " + std::to_string(stalled) +
                         " consecutive evolve calls (" +
                         std::to_string(tracker.remaining()) +
                         " interactions still uncovered)");
      }
      continue;
    }

    stalled = 0;
    tracker.mark_covered(result.best.test);
    report.suite.tests.push_back(result.best.test);
    report.per_test_stats.push_back(result.stats);
    report.totals += result.stats;
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

namespace {

// Mean and population standard deviation of suite sizes.
void size_moments(const std::vector<std::size_t>& sizes, double& mean,
                  double& stddev) {
  mean = 0.0;
  for (std::size_t s : sizes) mean += static_cast<double>(s);
  mean /= static_cast<double>(sizes.size());
  double var = 0.0;
  for (std::size_t s : sizes) {
    const double d = static_cast<double>(s) - mean;
    var += d * d;
  }
  var /= static_cast<double>(sizes.size());
  stddev = std::sqrt(var);
}

}  // namespace

BestOfRuns best_of_runs(const SystemModel& model, EngineKind engine,
                        EngineConfig cfg, int runs, std::uint64_t base_seed,
                        int jobs) {
  if (runs < 1) throw ConfigError("runs must be at least 1");
  if (jobs < 1) throw ConfigError("jobs must be at least 1");
  validate(cfg);

  std::vector<RunReport> reports(static_cast<std::size_t>(runs));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(runs));

  auto run_one = [&](int i) {
    EngineConfig run_cfg = cfg;
    run_cfg.seed = base_seed + static_cast<std::uint64_t>(i);
    try {
      reports[static_cast<std::size_t>(i)] = generate(model, engine, run_cfg);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  };

  if (jobs <= 1 || runs == 1) {
    for (int i = 0; i < runs; ++i) run_one(i);
  } else {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (int i = next.fetch_add(1); i < runs; i = next.fetch_add(1))
        run_one(i);
    };
    const int thread_count = std::min(jobs, runs);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Surface the first failed run with enough context to reproduce it alone.
  for (int i = 0; i < runs; ++i) {
    if (!errors[static_cast<std::size_t>(i)]) continue;
    const std::string where = "run " + std::to_string(i) + " (seed " +
                              std::to_string(base_seed +
                                             static_cast<std::uint64_t>(i)) +
                              "): ";
    try {
      std::rethrow_exception(errors[static_cast<std::size_t>(i)]);
    } catch (const StallError& e) {
      throw StallError(where + e.what());
    } catch (const CapacityError& e) {
      throw CapacityError(where + e.what());
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    } catch (const std::overflow_error& e) {
      throw std::overflow_error(where + e.what());
    } catch (const std::exception& e) {
      throw std::runtime_error(where + e.what());
    }
  }

  BestOfRuns out;
  out.summary.runs = runs;
  out.summary.base_seed = base_seed;
  out.summary.sizes.reserve(static_cast<std::size_t>(runs));
  out.summary.run_totals.reserve(static_cast<std::size_t>(runs));

  int best = 0;
  for (int i = 0; i < runs; ++i) {
    const RunReport& r = reports[static_cast<std::size_t>(i)];
    out.summary.sizes.push_back(r.suite.size());
    out.summary.run_totals.push_back(r.totals);
    if (r.suite.size() < reports[static_cast<std::size_t>(best)].suite.size())
      best = i;
  }

  out.summary.best_run = best;
  out.summary.min_size = reports[static_cast<std::size_t>(best)].suite.size();
  out.summary.max_size = out.summary.min_size;
  for (std::size_t s : out.summary.sizes)
    out.summary.max_size = std::max(out.summary.max_size, s);
  size_moments(out.summary.sizes, out.summary.mean_size,
               out.summary.stddev_size);

  out.best = std::move(reports[static_cast<std::size_t>(best)]);
  return out;
}

}  // namespace fpcov
