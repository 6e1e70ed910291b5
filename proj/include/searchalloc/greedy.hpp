#pragma once

#include <cstdint>
#include <string>

#include "searchalloc/model.hpp"

namespace searchalloc {

// Multiset of accessibility pairs with per-agent totals within budget;
// counts are aligned with SearchInstance::arcs like a Schedule, but agent
// budgets act as upper bounds rather than equalities.
struct AssignmentSet {
  std::vector<int> counts;
};

struct InfeasibleSet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Submodular objective of the agent-dependent variant: each unit assigned
// through arc (m,k) multiplies location k's miss probability by 1-alpha_mk.
double f_value(const AssignmentSet& set, const SearchInstance& inst);

// Heap-based lazy greedy for heterogeneous instances. Exhausted entries are
// re-keyed to the best remaining accessor by the ratio alpha''/alpha'.
// Guarantees f(result) >= f(optimal)/2 (matroid-constrained greedy bound).
Schedule greedy_solve(const SearchInstance& inst);

// Reference greedy: rescans every arc for the best marginal gain at each
// step. Must match greedy_solve's objective exactly.
Schedule naive_greedy(const SearchInstance& inst);

struct PropertyVerdict {
  bool pass = true;
  std::string counterexample;
};

// Randomized checks of monotonicity + diminishing returns of f, and of the
// hereditary + augmentation properties of the budget matroid.
PropertyVerdict check_submodular(const SearchInstance& inst, int trials, uint64_t seed);
PropertyVerdict check_matroid(const SearchInstance& inst, int trials, uint64_t seed);

}  // namespace searchalloc
