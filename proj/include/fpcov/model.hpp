#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fpcov/rng.hpp"

namespace fpcov {

/// System under test: one value cardinality (>= 2) per parameter plus the
/// interaction strength t, with 2 <= t <= parameter count. Immutable after
/// construction and safe to share across threads.
struct SystemModel {
  std::vector<int> cardinalities;
  int strength = 2;

  int param_count() const { return static_cast<int>(cardinalities.size()); }

  /// Product of all cardinalities. Throws std::overflow_error instead of
  /// wrapping.
  std::uint64_t exhaustive_size() const;

  bool operator==(const SystemModel&) const = default;
};

/// One concrete test case: values[i] in [0, cardinalities[i]).
struct TestCase {
  std::vector<int> values;
  bool operator==(const TestCase&) const = default;
};

bool test_in_range(const SystemModel& model, const TestCase& test);

/// Candidate solution: a continuous position inside the box prod [0, v_i),
/// its discretization, and the last evaluated fitness (-1 = unset).
struct Pollen {
  std::vector<double> position;
  TestCase test;
  std::int64_t fitness = -1;
  bool operator==(const Pollen&) const = default;
};

/// Floor-and-clamp map onto a test case:
/// value[i] = clamp(floor(position[i]), 0, cardinalities[i] - 1).
TestCase discretize(const std::vector<double>& position,
                    const SystemModel& model);

/// Parse "v^k [v^k ...] t=N". Terms may mix cardinalities; exponent braces
/// as in "3^{13}" are accepted. Throws ParseError.
SystemModel parse_model(std::string_view spec);

/// One model per line; '#' starts a comment; blank lines are skipped.
std::vector<SystemModel> parse_models_text(std::string_view text);
std::vector<SystemModel> parse_model_file(const std::string& path);

/// Inverse of parse_model, e.g. "3^4 t=2". Consecutive equal cardinalities
/// are grouped, so parse_model(render_model(m)) == m.
std::string render_model(const SystemModel& model);

/// Fresh pollen with each coordinate uniform in [0, cardinalities[i]) and
/// test = discretize(position). Fitness is left unset; callers evaluate it
/// against a coverage tracker.
Pollen random_test(const SystemModel& model, Rng& rng);

}  // namespace fpcov
