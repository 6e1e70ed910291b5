#include "searchalloc/greedy.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <queue>
#include <random>
#include <sstream>

namespace searchalloc {
namespace {

void require_heterogeneous(const SearchInstance& inst) {
  if (inst.homogeneous())
    throw std::invalid_argument("greedy solver requires a heterogeneous detection model");
}

void check_feasible(const AssignmentSet& set, const SearchInstance& inst) {
  if (set.counts.size() != inst.arcs.size())
    throw InfeasibleSet("assignment set / instance arc count mismatch");
  std::vector<int> used(inst.num_agents, 0);
  for (size_t a = 0; a < set.counts.size(); ++a) {
    if (set.counts[a] < 0) throw InfeasibleSet("negative multiplicity");
    used[inst.arcs[a].agent] += set.counts[a];
  }
  for (int m = 0; m < inst.num_agents; ++m)
    if (used[m] > inst.budgets[m])
      throw InfeasibleSet("agent " + std::to_string(m) + " exceeds its budget");
}

// Max heap entry; ties on value resolved by ascending (location, agent).
struct Entry {
  double value;
  int location;
  int agent;
  int arc;

  bool operator<(const Entry& other) const {
    if (value != other.value) return value < other.value;
    if (location != other.location) return location > other.location;
    return agent > other.agent;
  }
};

}  // namespace

double f_value(const AssignmentSet& set, const SearchInstance& inst) {
  require_heterogeneous(inst);
  check_feasible(set, inst);
  std::vector<double> miss(inst.num_locations, 1.0);
  for (size_t a = 0; a < set.counts.size(); ++a)
    miss[inst.arcs[a].location] *= std::pow(1.0 - inst.detection.alpha[a], set.counts[a]);
  double total = 0.0;
  for (int k = 0; k < inst.num_locations; ++k) total += inst.priors[k] * (1.0 - miss[k]);
  return total;
}

Schedule greedy_solve(const SearchInstance& inst) {
  require_heterogeneous(inst);
  AdjacencyIndex adj(inst);

  std::vector<int> residual = inst.budgets;
  std::vector<double> miss(inst.num_locations, 1.0);
  Schedule schedule;
  schedule.counts.assign(inst.arcs.size(), 0);

  auto best_supplied = [&](int k) -> const std::pair<int, int>* {
    const std::pair<int, int>* best = nullptr;
    for (const auto& entry : adj.agents_of[k]) {
      if (residual[entry.first] <= 0) continue;
      if (!best || inst.detection.alpha[entry.second] > inst.detection.alpha[best->second])
        best = &entry;
    }
    return best;
  };

  std::priority_queue<Entry> heap;
  for (int k = 0; k < inst.num_locations; ++k) {
    const std::pair<int, int>* best = nullptr;
    for (const auto& entry : adj.agents_of[k])
      if (!best || inst.detection.alpha[entry.second] > inst.detection.alpha[best->second])
        best = &entry;
    if (best)
      heap.push({inst.priors[k] * inst.detection.alpha[best->second], k, best->first, best->second});
  }

  while (!heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    if (residual[top.agent] > 0) {
#ifndef NDEBUG
      // Lazily propagated keys must equal the directly recomputed marginal.
      double direct = inst.priors[top.location] * inst.detection.alpha[top.arc] * miss[top.location];
      assert(std::abs(top.value - direct) <= 1e-12 * std::max(1.0, direct));
#endif
      schedule.counts[top.arc] += 1;
      residual[top.agent] -= 1;
      double keep = 1.0 - inst.detection.alpha[top.arc];
      miss[top.location] *= keep;
      heap.push({top.value * keep, top.location, top.agent, top.arc});
    } else {
      const std::pair<int, int>* next = best_supplied(top.location);
      if (next) {
        double ratio = inst.detection.alpha[next->second] / inst.detection.alpha[top.arc];
        heap.push({top.value * ratio, top.location, next->first, next->second});
      }
      // No supplied accessor left: location drops out for good (supply
      // only ever decreases).
    }
  }
  return schedule;
}

Schedule naive_greedy(const SearchInstance& inst) {
  require_heterogeneous(inst);
  std::vector<int> residual = inst.budgets;
  std::vector<double> miss(inst.num_locations, 1.0);
  Schedule schedule;
  schedule.counts.assign(inst.arcs.size(), 0);

  while (true) {
    int best_arc = -1;
    double best_value = -1.0;
    for (size_t a = 0; a < inst.arcs.size(); ++a) {
      const Arc& arc = inst.arcs[a];
      if (residual[arc.agent] <= 0) continue;
      double value = inst.priors[arc.location] * inst.detection.alpha[a] * miss[arc.location];
      bool better = value > best_value;
      if (!better && value == best_value && best_arc >= 0) {
        const Arc& cur = inst.arcs[best_arc];
        better = std::pair(arc.location, arc.agent) < std::pair(cur.location, cur.agent);
      }
      if (better) {
        best_value = value;
        best_arc = (int)a;
      }
    }
    if (best_arc < 0) break;
    schedule.counts[best_arc] += 1;
    residual[inst.arcs[best_arc].agent] -= 1;
    miss[inst.arcs[best_arc].location] *= 1.0 - inst.detection.alpha[best_arc];
  }
  return schedule;
}

namespace {

double portable_uniform(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + (int)(portable_uniform(rng) * (hi - lo + 1e-12));
}

AssignmentSet random_feasible(const SearchInstance& inst, const AdjacencyIndex& adj,
                              std::mt19937_64& rng) {
  AssignmentSet set;
  set.counts.assign(inst.arcs.size(), 0);
  for (int m = 0; m < inst.num_agents; ++m) {
    const auto& arcs_m = adj.locations_of[m];
    if (arcs_m.empty()) continue;
    int units = uniform_int(rng, 0, inst.budgets[m]);
    for (int u = 0; u < units; ++u)
      set.counts[arcs_m[(size_t)uniform_int(rng, 0, (int)arcs_m.size() - 1)].second] += 1;
  }
  return set;
}

int total_units(const AssignmentSet& set) {
  int n = 0;
  for (int c : set.counts) n += c;
  return n;
}

}  // namespace

PropertyVerdict check_submodular(const SearchInstance& inst, int trials, uint64_t seed) {
  require_heterogeneous(inst);
  AdjacencyIndex adj(inst);
  std::mt19937_64 rng(seed);
  PropertyVerdict verdict;
  constexpr double tol = 1e-12;

  for (int trial = 0; trial < trials; ++trial) {
    AssignmentSet large = random_feasible(inst, adj, rng);
    AssignmentSet small;
    small.counts.resize(large.counts.size());
    for (size_t a = 0; a < large.counts.size(); ++a)
      small.counts[a] = uniform_int(rng, 0, large.counts[a]);

    double f_small = f_value(small, inst);
    double f_large = f_value(large, inst);
    if (f_small > f_large + tol) {
      verdict.pass = false;
      verdict.counterexample = "monotonicity failed at trial " + std::to_string(trial);
      return verdict;
    }

    // Element addable to the large set (and therefore to the subset).
    std::vector<int> used(inst.num_agents, 0);
    for (size_t a = 0; a < large.counts.size(); ++a) used[inst.arcs[a].agent] += large.counts[a];
    std::vector<int> candidates;
    for (size_t a = 0; a < inst.arcs.size(); ++a)
      if (used[inst.arcs[a].agent] < inst.budgets[inst.arcs[a].agent]) candidates.push_back((int)a);
    if (candidates.empty()) continue;
    int e = candidates[(size_t)uniform_int(rng, 0, (int)candidates.size() - 1)];

    small.counts[e] += 1;
    double gain_small = f_value(small, inst) - f_small;
    small.counts[e] -= 1;
    large.counts[e] += 1;
    double gain_large = f_value(large, inst) - f_large;
    large.counts[e] -= 1;
    if (gain_small < gain_large - tol) {
      std::ostringstream os;
      os << "diminishing returns failed at trial " << trial << ": subset gain " << gain_small
         << " < superset gain " << gain_large;
      verdict.pass = false;
      verdict.counterexample = os.str();
      return verdict;
    }
  }
  return verdict;
}

PropertyVerdict check_matroid(const SearchInstance& inst, int trials, uint64_t seed) {
  require_heterogeneous(inst);
  AdjacencyIndex adj(inst);
  std::mt19937_64 rng(seed);
  PropertyVerdict verdict;

  for (int trial = 0; trial < trials; ++trial) {
    AssignmentSet big = random_feasible(inst, adj, rng);

    // Hereditary closure: any sub-multiset stays feasible.
    AssignmentSet sub;
    sub.counts.resize(big.counts.size());
    for (size_t a = 0; a < big.counts.size(); ++a) sub.counts[a] = uniform_int(rng, 0, big.counts[a]);
    try {
      check_feasible(sub, inst);
    } catch (const InfeasibleSet&) {
      verdict.pass = false;
      verdict.counterexample = "hereditary property failed at trial " + std::to_string(trial);
      return verdict;
    }

    // Augmentation: an independently drawn smaller set must accept some
    // element of the bigger one. Equal sizes are skipped.
    AssignmentSet other = random_feasible(inst, adj, rng);
    const AssignmentSet* larger = &big;
    AssignmentSet* smaller = &other;
    if (total_units(other) > total_units(big)) {
      larger = &other;
      smaller = &big;
    }
    if (total_units(*smaller) >= total_units(*larger)) continue;

    std::vector<int> used_small(inst.num_agents, 0);
    int augmenting_arc = -1;
    for (size_t a = 0; a < inst.arcs.size(); ++a) used_small[inst.arcs[a].agent] += smaller->counts[a];
    for (size_t a = 0; a < inst.arcs.size() && augmenting_arc < 0; ++a) {
      int m = inst.arcs[a].agent;
      if (larger->counts[a] > smaller->counts[a]) {
        int used_large_m = 0;
        for (size_t b = 0; b < inst.arcs.size(); ++b)
          if (inst.arcs[b].agent == m) used_large_m += larger->counts[b];
        if (used_small[m] < used_large_m) augmenting_arc = (int)a;
      }
    }
    if (augmenting_arc < 0) {
      verdict.pass = false;
      verdict.counterexample = "augmentation property failed at trial " + std::to_string(trial);
      return verdict;
    }
    smaller->counts[augmenting_arc] += 1;
    try {
      check_feasible(*smaller, inst);
    } catch (const InfeasibleSet&) {
      verdict.pass = false;
      verdict.counterexample =
          "augmented set infeasible at trial " + std::to_string(trial);
      return verdict;
    }
    smaller->counts[augmenting_arc] -= 1;
  }
  return verdict;
}

}  // namespace searchalloc
