#pragma once

#include <cstdint>
#include <vector>

#include "fpcov/model.hpp"

namespace fpcov {

/// One t-way interaction: t strictly increasing column indices and one
/// value per chosen column.
struct InteractionTuple {
  std::vector<int> columns;
  std::vector<int> assignment;
  bool operator==(const InteractionTuple&) const = default;
};

/// C(n, r), overflow-checked.
std::uint64_t binomial(int n, int r);

/// Total number of t-way tuples of a model: the sum over all C(k,t) column
/// choices of the product of the chosen cardinalities. Throws
/// std::overflow_error instead of wrapping.
std::uint64_t tuple_count(const SystemModel& model);

inline constexpr std::uint64_t kDefaultTupleBudgetBytes = 1ull << 30;

/// Live set of uncovered tuples: one flag bit per tuple, grouped per column
/// combination and indexed by the mixed-radix rank of the assignment.
///
/// fitness() is const and safe for concurrent readers; mark_covered()
/// requires exclusive access.
class CoverageTracker {
public:
  /// All tuples start uncovered. The budget covers the flag bits plus the
  /// per-combination index; throws CapacityError when exceeded.
  explicit CoverageTracker(
      const SystemModel& model,
      std::uint64_t memory_budget_bytes = kDefaultTupleBudgetBytes);

  /// Number of still-uncovered tuples this test would cover. Pure.
  std::int64_t fitness(const TestCase& test) const;

  /// Flag every tuple of `test` as covered. Returns the number newly
  /// covered; remaining() drops by exactly that amount.
  std::int64_t mark_covered(const TestCase& test);

  std::uint64_t remaining() const { return remaining_; }
  std::uint64_t total_tuples() const { return total_; }
  const SystemModel& model() const { return model_; }

private:
  SystemModel model_;
  int strength_ = 0;
  std::size_t combo_count_ = 0;
  std::vector<int> combo_columns_;             // combo_count_ x t, flattened
  std::vector<std::uint64_t> combo_weights_;   // mixed-radix weights
  std::vector<std::uint64_t> combo_bit_offset_;
  std::vector<std::uint64_t> words_;
  std::uint64_t total_ = 0;
  std::uint64_t remaining_ = 0;
};

}  // namespace fpcov
