#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace searchalloc {

// Accessibility pair: agent may spend effort at location. Indices are 0-based.
struct Arc {
  int agent = -1;
  int location = -1;

  friend bool operator==(const Arc&, const Arc&) = default;
};

enum class DetectionKind { Homogeneous, Heterogeneous };

// Per-location detection probability (homogeneous) or per-arc (heterogeneous).
// In the heterogeneous case `alpha` is aligned with SearchInstance::arcs.
struct DetectionModel {
  DetectionKind kind = DetectionKind::Homogeneous;
  std::vector<double> alpha;
};

struct SearchInstance {
  int num_agents = 0;
  int num_locations = 0;
  std::vector<int> budgets;        // per agent, >= 1
  std::vector<double> priors;      // per location, in [0,1]
  DetectionModel detection;
  std::vector<Arc> arcs;
  // External ids used by the JSON formats; empty means 1-based defaults.
  std::vector<int> agent_ids;
  std::vector<int> location_ids;

  int agent_id(int m) const { return agent_ids.empty() ? m + 1 : agent_ids[m]; }
  int location_id(int k) const { return location_ids.empty() ? k + 1 : location_ids[k]; }

  int total_budget() const {
    int n = 0;
    for (int b : budgets) n += b;
    return n;
  }
  bool homogeneous() const { return detection.kind == DetectionKind::Homogeneous; }
};

// Integer allocation aligned with SearchInstance::arcs.
struct Schedule {
  std::vector<int> counts;

  // u_k totals; the y_{kj} indicators are implied: y_{kj} = 1 iff j <= u_k.
  std::vector<int> location_totals(const SearchInstance& inst) const;
  std::vector<int> agent_totals(const SearchInstance& inst) const;
};

enum class ViolationKind {
  IsolatedLocation,
  IsolatedAgent,
  BadProbability,
  DuplicateArc,
  EmptyInstance,
  BadBudget,
  BadArc,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Checks every instance invariant and reports all failures at once.
// A prior sum below 1 (object possibly absent) is a warning, not an error.
ValidationReport validate(const SearchInstance& inst);

struct ScheduleInstanceMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// p_{kj}: probability the j-th search of location k is the first to detect.
// Homogeneous model only; j >= 1.
double marginal_value(const SearchInstance& inst, int location, int j);

// Total detection probability of a feasible schedule.
double objective(const SearchInstance& inst, const Schedule& schedule);

// Sorted adjacency shared by the solvers. agents_of[k] / locations_of[m]
// hold (neighbor index, arc index) pairs in ascending neighbor order.
struct AdjacencyIndex {
  std::vector<std::vector<std::pair<int, int>>> agents_of;
  std::vector<std::vector<std::pair<int, int>>> locations_of;

  explicit AdjacencyIndex(const SearchInstance& inst);
};

}  // namespace searchalloc
