#include "searchalloc/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace searchalloc {

std::vector<int> Schedule::location_totals(const SearchInstance& inst) const {
  if (counts.size() != inst.arcs.size())
    throw ScheduleInstanceMismatch("schedule has " + std::to_string(counts.size()) +
                                   " arcs, instance has " + std::to_string(inst.arcs.size()));
  std::vector<int> u(inst.num_locations, 0);
  for (size_t a = 0; a < counts.size(); ++a) u[inst.arcs[a].location] += counts[a];
  return u;
}

std::vector<int> Schedule::agent_totals(const SearchInstance& inst) const {
  if (counts.size() != inst.arcs.size())
    throw ScheduleInstanceMismatch("schedule/instance arc count mismatch");
  std::vector<int> t(inst.num_agents, 0);
  for (size_t a = 0; a < counts.size(); ++a) t[inst.arcs[a].agent] += counts[a];
  return t;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) os << "error: " << v.message << "\n";
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  return os.str();
}

ValidationReport validate(const SearchInstance& inst) {
  ValidationReport report;
  auto fail = [&](ViolationKind kind, const std::string& msg) {
    report.violations.push_back({kind, msg});
  };

  if (inst.num_agents <= 0 || inst.num_locations <= 0 || inst.arcs.empty()) {
    fail(ViolationKind::EmptyInstance, "instance needs at least one agent, location and arc");
    return report;
  }
  if ((int)inst.budgets.size() != inst.num_agents)
    fail(ViolationKind::BadBudget, "budget list size does not match agent count");
  if ((int)inst.priors.size() != inst.num_locations)
    fail(ViolationKind::BadProbability, "prior list size does not match location count");

  for (size_t m = 0; m < inst.budgets.size(); ++m)
    if (inst.budgets[m] < 1)
      fail(ViolationKind::BadBudget, "agent " + std::to_string(m) + " has budget < 1");

  double prior_sum = 0.0;
  for (size_t k = 0; k < inst.priors.size(); ++k) {
    double p = inst.priors[k];
    if (!(p >= 0.0 && p <= 1.0))
      fail(ViolationKind::BadProbability, "prior of location " + std::to_string(k) +
                                              " outside [0,1]: " + std::to_string(p));
    else
      prior_sum += p;
  }
  if (prior_sum > 1.0 + 1e-9)
    fail(ViolationKind::BadProbability,
         "priors sum to " + std::to_string(prior_sum) + " > 1 (single hidden object)");
  else if (prior_sum < 1.0 - 1e-9)
    report.warnings.push_back("priors sum to " + std::to_string(prior_sum) +
                              " < 1; the object may be absent");

  std::set<std::pair<int, int>> seen;
  std::vector<bool> agent_used(inst.num_agents, false);
  std::vector<bool> location_used(inst.num_locations, false);
  for (const Arc& arc : inst.arcs) {
    if (arc.agent < 0 || arc.agent >= inst.num_agents || arc.location < 0 ||
        arc.location >= inst.num_locations) {
      fail(ViolationKind::BadArc, "arc (" + std::to_string(arc.agent) + "," +
                                      std::to_string(arc.location) + ") out of range");
      continue;
    }
    if (!seen.insert({arc.agent, arc.location}).second)
      fail(ViolationKind::DuplicateArc, "duplicate arc (" + std::to_string(arc.agent) + "," +
                                            std::to_string(arc.location) + ")");
    agent_used[arc.agent] = true;
    location_used[arc.location] = true;
  }
  for (int m = 0; m < inst.num_agents; ++m)
    if (!agent_used[m])
      fail(ViolationKind::IsolatedAgent, "agent " + std::to_string(m) + " can access no location");
  for (int k = 0; k < inst.num_locations; ++k)
    if (!location_used[k])
      fail(ViolationKind::IsolatedLocation,
           "location " + std::to_string(k) + " is reachable by no agent");

  const auto& alpha = inst.detection.alpha;
  size_t expected =
      inst.homogeneous() ? (size_t)inst.num_locations : inst.arcs.size();
  if (alpha.size() != expected) {
    fail(ViolationKind::BadProbability, "detection model stores " + std::to_string(alpha.size()) +
                                            " values, expected " + std::to_string(expected));
  } else {
    for (size_t i = 0; i < alpha.size(); ++i)
      if (!(alpha[i] > 0.0 && alpha[i] <= 1.0))
        fail(ViolationKind::BadProbability,
             "detection probability " + std::to_string(i) + " outside (0,1]: " +
                 std::to_string(alpha[i]));
  }

  return report;
}

double marginal_value(const SearchInstance& inst, int location, int j) {
  if (!inst.homogeneous())
    throw std::invalid_argument("marginal_value requires a homogeneous detection model");
  if (location < 0 || location >= inst.num_locations || j < 1)
    throw std::out_of_range("marginal_value index out of range");
  double alpha = inst.detection.alpha[location];
  return inst.priors[location] * std::pow(1.0 - alpha, j - 1) * alpha;
}

double objective(const SearchInstance& inst, const Schedule& schedule) {
  if (schedule.counts.size() != inst.arcs.size())
    throw ScheduleInstanceMismatch("schedule/instance arc count mismatch");
  double total = 0.0;
  if (inst.homogeneous()) {
    std::vector<int> u = schedule.location_totals(inst);
    for (int k = 0; k < inst.num_locations; ++k) {
      double alpha = inst.detection.alpha[k];
      total += inst.priors[k] * (1.0 - std::pow(1.0 - alpha, u[k]));
    }
  } else {
    std::vector<double> miss(inst.num_locations, 1.0);
    for (size_t a = 0; a < inst.arcs.size(); ++a)
      miss[inst.arcs[a].location] *=
          std::pow(1.0 - inst.detection.alpha[a], schedule.counts[a]);
    for (int k = 0; k < inst.num_locations; ++k)
      total += inst.priors[k] * (1.0 - miss[k]);
  }
  return total;
}

AdjacencyIndex::AdjacencyIndex(const SearchInstance& inst)
    : agents_of(inst.num_locations), locations_of(inst.num_agents) {
  for (size_t a = 0; a < inst.arcs.size(); ++a) {
    const Arc& arc = inst.arcs[a];
    agents_of[arc.location].push_back({arc.agent, (int)a});
    locations_of[arc.agent].push_back({arc.location, (int)a});
  }
  for (auto& v : agents_of) std::sort(v.begin(), v.end());
  for (auto& v : locations_of) std::sort(v.begin(), v.end());
}

}  // namespace searchalloc
