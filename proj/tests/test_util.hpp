#pragma once

#include <vector>

#include "fpcov/model.hpp"
#include "fpcov/rng.hpp"

namespace fpcov::test {

/// The known-optimal 9-row pairwise suite for four 3-valued parameters:
/// rows [a, b, a+b mod 3, a+2b mod 3]. Every column pair and value pair
/// appears exactly once (orthogonal-array construction).
inline std::vector<TestCase> oa9_3_4() {
  std::vector<TestCase> rows;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      rows.push_back(TestCase{{a, b, (a + b) % 3, (a + 2 * b) % 3}});
  return rows;
}

/// Random small model for property tests: k in [2, max_k], each
/// cardinality in [2, max_v], t in [2, min(max_t, k)].
inline SystemModel random_model(Rng& rng, int max_k, int max_v, int max_t) {
  SystemModel model;
  const int k = 2 + rng.below(max_k - 1);
  for (int i = 0; i < k; ++i)
    model.cardinalities.push_back(2 + rng.below(max_v - 1));
  const int t_cap = std::min(max_t, k);
  model.strength = 2 + (t_cap > 2 ? rng.below(t_cap - 1) : 0);
  return model;
}

/// Uniformly random valid test for a model.
inline TestCase random_case(const SystemModel& model, Rng& rng) {
  TestCase t;
  for (int v : model.cardinalities) t.values.push_back(rng.below(v));
  return t;
}

}  // namespace fpcov::test
