#include "fpcov/engine.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "fpcov/errors.hpp"

namespace fpcov {

namespace {

std::vector<Pollen> init_population(const CoverageTracker& tracker,
                                    int population, Rng& rng) {
  std::vector<Pollen> pop;
  pop.reserve(static_cast<std::size_t>(population));
  for (int i = 0; i < population; ++i) {
    Pollen p = random_test(tracker.model(), rng);
    p.fitness = tracker.fitness(p.test);
    pop.push_back(std::move(p));
  }
  return pop;
}

std::size_t best_index(const std::vector<Pollen>& pop) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < pop.size(); ++i)
    if (pop[i].fitness > pop[best].fitness) best = i;
  return best;
}

// No test can cover more than C(k,t) tuples, nor more than remain
// uncovered; once the best pollen reaches this cap there is nothing left
// to search for.
std::int64_t fitness_cap(const CoverageTracker& tracker) {
  const SystemModel& m = tracker.model();
  const std::uint64_t per_test = binomial(m.param_count(), m.strength);
  return static_cast<std::int64_t>(
      std::min<std::uint64_t>(per_test, tracker.remaining()));
}

}  // namespace

std::string to_string(EngineKind kind) {
  return kind == EngineKind::fpa ? "fpa" : "imfpa";
}

EngineKind engine_from_string(const std::string& name) {
  if (name == "fpa") return EngineKind::fpa;
  if (name == "imfpa") return EngineKind::imfpa;
  throw ConfigError("unknown engine '" + name + "' (expected fpa or imfpa)");
}

void validate(const EngineConfig& cfg) {
  if (cfg.population < 2)
    throw ConfigError("population must be >= 2 (local pollination draws two "
                      "population members)");
  if (cfg.max_generations < 1)
    throw ConfigError("max_generations must be >= 1");
  if (!(cfg.switch_p >= 0.0) || !(cfg.switch_p <= 1.0))
    throw ConfigError("switch_p must be in [0, 1]");
  if (cfg.stall_limit < 1) throw ConfigError("stall_limit must be >= 1");
  validate(cfg.levy);
}

double OperatorStats::global_pct() const {
  const std::uint64_t total = global_successes + local_successes;
  return total == 0 ? 0.0
                    : 100.0 * static_cast<double>(global_successes) /
                          static_cast<double>(total);
}

double OperatorStats::local_pct() const {
  const std::uint64_t total = global_successes + local_successes;
  return total == 0 ? 0.0
                    : 100.0 * static_cast<double>(local_successes) /
                          static_cast<double>(total);
}

OperatorStats& OperatorStats::operator+=(const OperatorStats& other) {
  global_attempts += other.global_attempts;
  global_successes += other.global_successes;
  local_attempts += other.local_attempts;
  local_successes += other.local_successes;
  return *this;
}

double acceptance_probability(std::int64_t f_old, std::int64_t f_new,
                              std::uint64_t success_count,
                              const EngineConfig& cfg) {
  assert(f_new <= f_old);
  const double delta = static_cast<double>(f_old - f_new) /
                       static_cast<double>(std::max<std::int64_t>(f_old, 1));
  return std::exp(-delta * (1.0 + static_cast<double>(success_count) /
                                      cfg.resolved_accept_scale()));
}

EvolveResult evolve_imfpa(const CoverageTracker& tracker,
                          const EngineConfig& cfg, Rng& rng,
                          const OperatorStats& carry) {
  validate(cfg);
  const SystemModel& model = tracker.model();
  const std::int64_t cap = fitness_cap(tracker);

  std::vector<Pollen> pop = init_population(tracker, cfg.population, rng);
  Pollen gbest = pop[best_index(pop)];
  OperatorStats st;
  int gen = 0;
  for (; gen < cfg.max_generations && gbest.fitness < cap; ++gen) {
    for (Pollen& x : pop) {
      // Global pollination toward gbest; worse candidates survive with the
      // dynamic acceptance probability.
      Pollen cand = global_pollinate(x, gbest, cfg.levy, model, rng);
      cand.fitness = tracker.fitness(cand.test);
      ++st.global_attempts;
      if (cand.fitness > x.fitness) {
        x = std::move(cand);
        ++st.global_successes;
      } else if (rng.uniform() <
                 acceptance_probability(
                     x.fitness, cand.fitness,
                     carry.global_successes + st.global_successes, cfg)) {
        x = std::move(cand);
      }
      // Local pollination on the (possibly updated) pollen.
      const Pollen& xj = pop[rng.below(cfg.population)];
      const Pollen& xk = pop[rng.below(cfg.population)];
      Pollen cand2 = local_pollinate(x, xj, xk, model, rng);
      cand2.fitness = tracker.fitness(cand2.test);
      ++st.local_attempts;
      if (cand2.fitness > x.fitness) {
        x = std::move(cand2);
        ++st.local_successes;
      } else if (rng.uniform() <
                 acceptance_probability(
                     x.fitness, cand2.fitness,
                     carry.local_successes + st.local_successes, cfg)) {
        x = std::move(cand2);
      }
    }
    // gbest updates once per generation, after the sweep, and keeps the
    // best pollen ever seen: population members may drift to worse
    // solutions, the reported trajectory must not.
    const Pollen& cur = pop[best_index(pop)];
    if (cur.fitness > gbest.fitness) gbest = cur;
  }
  return EvolveResult{std::move(gbest), st, gen};
}

EvolveResult evolve_fpa(const CoverageTracker& tracker,
                        const EngineConfig& cfg, Rng& rng) {
  validate(cfg);
  const SystemModel& model = tracker.model();
  const std::int64_t cap = fitness_cap(tracker);

  std::vector<Pollen> pop = init_population(tracker, cfg.population, rng);
  Pollen gbest = pop[best_index(pop)];
  OperatorStats st;
  int gen = 0;
  for (; gen < cfg.max_generations && gbest.fitness < cap; ++gen) {
    for (Pollen& x : pop) {
      const bool go_global = rng.uniform() < cfg.switch_p;
      Pollen cand;
      if (go_global) {
        cand = global_pollinate(x, gbest, cfg.levy, model, rng);
        ++st.global_attempts;
      } else {
        const Pollen& xj = pop[rng.below(cfg.population)];
        const Pollen& xk = pop[rng.below(cfg.population)];
        cand = local_pollinate(x, xj, xk, model, rng);
        ++st.local_attempts;
      }
      cand.fitness = tracker.fitness(cand.test);
      if (cand.fitness > x.fitness) {
        (go_global ? st.global_successes : st.local_successes) += 1;
        x = std::move(cand);
      }
    }
    const Pollen& cur = pop[best_index(pop)];
    if (cur.fitness > gbest.fitness) gbest = cur;
  }
  return EvolveResult{std::move(gbest), st, gen};
}

}  // namespace fpcov
