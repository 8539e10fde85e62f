#pragma once

#include <cstdint>
#include <vector>

#include "fpcov/coverage.hpp"
#include "fpcov/model.hpp"

namespace fpcov {

struct VerifyVerdict {
  bool complete = false;
  std::vector<InteractionTuple> missing;
};

/// Brute-force completeness check: every column combination and every
/// assignment is enumerated by direct nested iteration and checked with a
/// linear scan over the suite. Deliberately shares no indexing code with
/// CoverageTracker, and is allowed to be orders of magnitude slower.
VerifyVerdict oracle_verify(const SystemModel& model,
                            const std::vector<TestCase>& tests);

/// Brute-force re-count of how many new tuples `candidate` would cover
/// after `covered_tests`. Must agree exactly with CoverageTracker::fitness
/// on a tracker replayed over the same tests.
std::int64_t oracle_fitness(const SystemModel& model,
                            const std::vector<TestCase>& covered_tests,
                            const TestCase& candidate);

}  // namespace fpcov
