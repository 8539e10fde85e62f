#include "fpcov/coverage.hpp"

#include <algorithm>
#include <cassert>

#include "fpcov/checked.hpp"
#include "fpcov/errors.hpp"

namespace fpcov {

namespace {

// Advance c to the next size-t subset of {0..k-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int k) {
  const int t = static_cast<int>(c.size());
  int i = t - 1;
  while (i >= 0 && c[i] == k - t + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
  return true;
}

}  // namespace

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    // Partial products are themselves binomials, so division is exact.
    result = checked_mul(result, static_cast<std::uint64_t>(n - r + i),
                         "binomial") /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

std::uint64_t tuple_count(const SystemModel& model) {
  // Elementary symmetric polynomial e_t(v_1..v_k), computed by DP so the
  // C(k,t) column choices are never enumerated.
  const int k = model.param_count();
  const int t = model.strength;
  std::vector<std::uint64_t> e(static_cast<std::size_t>(t) + 1, 0);
  e[0] = 1;
  for (int i = 0; i < k; ++i) {
    const auto v = static_cast<std::uint64_t>(model.cardinalities[i]);
    for (int j = std::min(t, i + 1); j >= 1; --j)
      e[j] = checked_add(e[j], checked_mul(e[j - 1], v, "tuple_count"),
                         "tuple_count");
  }
  return e[t];
}

CoverageTracker::CoverageTracker(const SystemModel& model,
                                 std::uint64_t memory_budget_bytes)
    : model_(model), strength_(model.strength) {
  const int k = model_.param_count();
  const int t = strength_;
  if (t < 2 || t > k)
    throw ConfigError("coverage tracker needs 2 <= t <= parameter count");
  for (int v : model_.cardinalities)
    if (v < 2) throw ConfigError("coverage tracker needs cardinalities >= 2");

  total_ = tuple_count(model_);
  const std::uint64_t combos = binomial(k, t);

  // Budget check before any allocation: flag bits plus the per-combination
  // column/weight/offset index.
  const std::uint64_t flag_bytes = total_ / 8 + 8;
  const std::uint64_t index_bytes = checked_mul(
      combos, static_cast<std::uint64_t>(t) * 12 + 8, "tracker index size");
  if (checked_add(flag_bytes, index_bytes, "tracker size") >
      memory_budget_bytes)
    throw CapacityError(
        "tuple universe needs ~" +
        std::to_string(flag_bytes + index_bytes) +
        " bytes, over the configured budget of " +
        std::to_string(memory_budget_bytes) + " bytes (" +
        std::to_string(total_) + " tuples)");

  combo_count_ = static_cast<std::size_t>(combos);
  combo_columns_.reserve(combo_count_ * t);
  combo_weights_.reserve(combo_count_ * t);
  combo_bit_offset_.reserve(combo_count_);

  std::vector<int> cols(t);
  for (int j = 0; j < t; ++j) cols[j] = j;
  std::uint64_t offset = 0;
  do {
    combo_bit_offset_.push_back(offset);
    std::uint64_t cells = 1;
    for (int j = t - 1; j >= 0; --j) {
      combo_weights_.push_back(cells);
      cells *= static_cast<std::uint64_t>(model_.cardinalities[cols[j]]);
    }
    // Weights were pushed for columns t-1..0; restore column order.
    std::reverse(combo_weights_.end() - t, combo_weights_.end());
    combo_columns_.insert(combo_columns_.end(), cols.begin(), cols.end());
    offset += cells;
  } while (next_combination(cols, k));
  assert(offset == total_);

  words_.assign(static_cast<std::size_t>((total_ + 63) / 64), 0);
  remaining_ = total_;
}

std::int64_t CoverageTracker::fitness(const TestCase& test) const {
  assert(test_in_range(model_, test));
  std::int64_t covered = 0;
  const int t = strength_;
  const int* cols = combo_columns_.data();
  const std::uint64_t* w = combo_weights_.data();
  for (std::size_t c = 0; c < combo_count_; ++c, cols += t, w += t) {
    std::uint64_t bit = combo_bit_offset_[c];
    for (int j = 0; j < t; ++j)
      bit += static_cast<std::uint64_t>(test.values[cols[j]]) * w[j];
    covered +=
        static_cast<std::int64_t>(~(words_[bit >> 6] >> (bit & 63)) & 1);
  }
  return covered;
}

std::int64_t CoverageTracker::mark_covered(const TestCase& test) {
  assert(test_in_range(model_, test));
  std::int64_t newly = 0;
  const int t = strength_;
  const int* cols = combo_columns_.data();
  const std::uint64_t* w = combo_weights_.data();
  for (std::size_t c = 0; c < combo_count_; ++c, cols += t, w += t) {
    std::uint64_t bit = combo_bit_offset_[c];
    for (int j = 0; j < t; ++j)
      bit += static_cast<std::uint64_t>(test.values[cols[j]]) * w[j];
    std::uint64_t& word = words_[bit >> 6];
    const std::uint64_t mask = 1ull << (bit & 63);
    if (!(word & mask)) {
      word |= mask;
      ++newly;
    }
  }
  remaining_ -= static_cast<std::uint64_t>(newly);
  return newly;
}

}  // namespace fpcov
