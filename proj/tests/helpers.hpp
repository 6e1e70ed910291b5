#pragma once

#include <random>
#include <vector>

#include "searchalloc/model.hpp"

namespace searchalloc::testing {

inline SearchInstance make_homogeneous(int agents, int locations, std::vector<int> budgets,
                                       std::vector<double> priors, std::vector<double> alpha,
                                       std::vector<Arc> arcs) {
  SearchInstance inst;
  inst.num_agents = agents;
  inst.num_locations = locations;
  inst.budgets = std::move(budgets);
  inst.priors = std::move(priors);
  inst.detection = {DetectionKind::Homogeneous, std::move(alpha)};
  inst.arcs = std::move(arcs);
  return inst;
}

inline SearchInstance make_heterogeneous(int agents, int locations, std::vector<int> budgets,
                                         std::vector<double> priors, std::vector<Arc> arcs,
                                         std::vector<double> arc_alpha) {
  SearchInstance inst;
  inst.num_agents = agents;
  inst.num_locations = locations;
  inst.budgets = std::move(budgets);
  inst.priors = std::move(priors);
  inst.detection = {DetectionKind::Heterogeneous, std::move(arc_alpha)};
  inst.arcs = std::move(arcs);
  return inst;
}

// The minimal legal instance: one agent, one location, one unit of effort.
inline SearchInstance minimal_instance() {
  return make_homogeneous(1, 1, {1}, {0.5}, {0.5}, {{0, 0}});
}

struct RandomSpec {
  int max_agents = 3;
  int max_locations = 4;
  int max_budget_each = 2;
  bool full_access = false;
  bool allow_alpha_one = true;
  bool substochastic = true;  // sometimes leave sum of priors below 1
};

// Random validated instance: every agent and location covered by at least
// one arc, detection probabilities in (0,1].
inline SearchInstance random_homogeneous(std::mt19937_64& rng, const RandomSpec& spec) {
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
  };
  auto uniform_int = [&](int lo, int hi) { return lo + (int)(rng() % (uint64_t)(hi - lo + 1)); };

  int agents = uniform_int(1, spec.max_agents);
  int locations = uniform_int(1, spec.max_locations);

  std::vector<Arc> arcs;
  std::vector<std::vector<char>> have(agents, std::vector<char>(locations, 0));
  auto add = [&](int m, int k) {
    if (!have[m][k]) {
      have[m][k] = 1;
      arcs.push_back({m, k});
    }
  };
  if (spec.full_access) {
    for (int m = 0; m < agents; ++m)
      for (int k = 0; k < locations; ++k) add(m, k);
  } else {
    for (int k = 0; k < locations; ++k) add(uniform_int(0, agents - 1), k);
    for (int m = 0; m < agents; ++m) add(m, uniform_int(0, locations - 1));
    int extras = uniform_int(0, agents * locations / 2);
    for (int i = 0; i < extras; ++i) add(uniform_int(0, agents - 1), uniform_int(0, locations - 1));
  }

  std::vector<int> budgets(agents);
  for (int& b : budgets) b = uniform_int(1, spec.max_budget_each);

  std::vector<double> priors(locations);
  double sum = 0.0;
  for (double& p : priors) {
    p = uniform(0.01, 1.0);
    sum += p;
  }
  double scale = spec.substochastic && (rng() & 1) ? uniform(0.5, 1.0) : 1.0;
  for (double& p : priors) p = p / sum * scale;

  std::vector<double> alpha(locations);
  for (double& a : alpha) {
    a = uniform(0.05, 0.95);
    if (spec.allow_alpha_one && rng() % 16 == 0) a = 1.0;
  }
  return make_homogeneous(agents, locations, std::move(budgets), std::move(priors),
                          std::move(alpha), std::move(arcs));
}

inline SearchInstance random_heterogeneous(std::mt19937_64& rng, const RandomSpec& spec) {
  SearchInstance inst = random_homogeneous(rng, spec);
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
  };
  inst.detection.kind = DetectionKind::Heterogeneous;
  inst.detection.alpha.assign(inst.arcs.size(), 0.0);
  for (double& a : inst.detection.alpha) {
    a = uniform(0.05, 0.95);
    if (spec.allow_alpha_one && rng() % 16 == 0) a = 1.0;
  }
  return inst;
}

}  // namespace searchalloc::testing
