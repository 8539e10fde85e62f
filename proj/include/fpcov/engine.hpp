#pragma once

#include <cstdint>
#include <string>

#include "fpcov/coverage.hpp"
#include "fpcov/pollination.hpp"

namespace fpcov {

enum class EngineKind { fpa, imfpa };

std::string to_string(EngineKind kind);
EngineKind engine_from_string(const std::string& name);  // throws ConfigError

struct EngineConfig {
  int population = 500;
  int max_generations = 500;
  /// Standard FPA only: probability of picking global over local
  /// pollination per pollen per generation.
  double switch_p = 0.8;
  /// S0 of the dynamic acceptance probability. <= 0 means "use the
  /// population size".
  double accept_scale = 0.0;
  LevyConfig levy;
  std::uint64_t seed = 0;

  // Outer-loop knobs.
  int stall_limit = 50;
  std::uint64_t tuple_memory_budget = kDefaultTupleBudgetBytes;
  /// Keep success counters running across outer-loop test cases instead of
  /// resetting them per test.
  bool persistent_success = false;

  double resolved_accept_scale() const {
    return accept_scale > 0.0 ? accept_scale : static_cast<double>(population);
  }

  bool operator==(const EngineConfig&) const = default;
};

/// Throws ConfigError on out-of-range fields.
void validate(const EngineConfig& cfg);

/// Success bookkeeping for the two pollination operators.
struct OperatorStats {
  std::uint64_t global_attempts = 0;
  std::uint64_t global_successes = 0;
  std::uint64_t local_attempts = 0;
  std::uint64_t local_successes = 0;

  /// Share of all successes attributable to each operator, in percent.
  /// Both are 0 when there were no successes at all.
  double global_pct() const;
  double local_pct() const;

  OperatorStats& operator+=(const OperatorStats& other);
  bool operator==(const OperatorStats&) const = default;
};

/// Probability of accepting a non-improving candidate:
///   P = exp(-delta * (1 + s/S0)),  delta = (f_old - f_new) / max(f_old, 1)
/// with s the operator's success count so far and
/// S0 = cfg.resolved_accept_scale(). Requires f_new <= f_old; P == 1
/// exactly when delta == 0, and P decreases strictly in both delta and s.
double acceptance_probability(std::int64_t f_old, std::int64_t f_new,
                              std::uint64_t success_count,
                              const EngineConfig& cfg);

struct EvolveResult {
  Pollen best;          // best-ever pollen seen during this call
  OperatorStats stats;  // operator bookkeeping for this call only
  int generations = 0;  // full population sweeps executed
};

/// imFPA inner loop: every generation both operators run in sequence for
/// every pollen; improving candidates are always taken, non-improving ones
/// pass through acceptance_probability. Exits early once the best fitness
/// saturates at min(C(k,t), tracker.remaining()). `carry` pre-loads the
/// success counts fed to acceptance_probability without being included in
/// the returned stats.
EvolveResult evolve_imfpa(const CoverageTracker& tracker,
                          const EngineConfig& cfg, Rng& rng,
                          const OperatorStats& carry = {});

/// Standard FPA inner loop: one operator per pollen per generation, picked
/// by switch_p; candidates replace the pollen only on strict improvement.
EvolveResult evolve_fpa(const CoverageTracker& tracker,
                        const EngineConfig& cfg, Rng& rng);

}  // namespace fpcov
