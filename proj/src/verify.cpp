#include "fpcov/verify.hpp"

#include <functional>

namespace fpcov {

namespace {

// Recursively pick `t` columns in increasing order, calling fn for each
// complete choice. Naive on purpose.
void walk_columns(int k, int t, int start, std::vector<int>& cols,
                  const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(cols.size()) == t) {
    fn(cols);
    return;
  }
  for (int c = start; c < k; ++c) {
    cols.push_back(c);
    walk_columns(k, t, c + 1, cols, fn);
    cols.pop_back();
  }
}

// Recursively assign a value to each chosen column.
void walk_assignments(const SystemModel& model, const std::vector<int>& cols,
                      std::size_t pos, std::vector<int>& vals,
                      const std::function<void(const std::vector<int>&)>& fn) {
  if (pos == cols.size()) {
    fn(vals);
    return;
  }
  for (int v = 0; v < model.cardinalities[cols[pos]]; ++v) {
    vals[pos] = v;
    walk_assignments(model, cols, pos + 1, vals, fn);
  }
}

bool suite_covers(const std::vector<TestCase>& tests,
                  const std::vector<int>& cols,
                  const std::vector<int>& vals) {
  for (const TestCase& test : tests) {
    bool match = true;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (test.values[cols[j]] != vals[j]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

}  // namespace

VerifyVerdict oracle_verify(const SystemModel& model,
                            const std::vector<TestCase>& tests) {
  VerifyVerdict verdict;
  std::vector<int> cols;
  walk_columns(model.param_count(), model.strength, 0, cols,
               [&](const std::vector<int>& chosen) {
                 std::vector<int> vals(chosen.size(), 0);
                 walk_assignments(
                     model, chosen, 0, vals, [&](const std::vector<int>& v) {
                       if (!suite_covers(tests, chosen, v))
                         verdict.missing.push_back(InteractionTuple{chosen, v});
                     });
               });
  verdict.complete = verdict.missing.empty();
  return verdict;
}

std::int64_t oracle_fitness(const SystemModel& model,
                            const std::vector<TestCase>& covered_tests,
                            const TestCase& candidate) {
  std::int64_t fresh = 0;
  std::vector<int> cols;
  walk_columns(model.param_count(), model.strength, 0, cols,
               [&](const std::vector<int>& chosen) {
                 std::vector<int> vals(chosen.size());
                 for (std::size_t j = 0; j < chosen.size(); ++j)
                   vals[j] = candidate.values[chosen[j]];
                 if (!suite_covers(covered_tests, chosen, vals)) ++fresh;
               });
  return fresh;
}

}  // namespace fpcov
