#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "searchalloc/model.hpp"

namespace searchalloc {

// Explicit min-cost-flow network: M sources, K sinks, one global sink.
// Source->sink arcs carry capacity N_m at cost 0; each sink has N parallel
// unit-capacity arcs to the global sink with cost -p_{kj} on the j-th.
struct FlowNetwork {
  struct NetArc {
    int from;
    int to;
    int capacity;
    double cost;
    int instance_arc;  // index into SearchInstance::arcs, or -1 for unit arcs
  };

  int num_sources = 0;
  int num_sinks = 0;
  std::vector<NetArc> arcs;
  std::vector<int> supplies;  // per source

  int source_node(int m) const { return m; }
  int sink_node(int k) const { return num_sources + k; }
  int global_sink() const { return num_sources + num_sinks; }
  int node_count() const { return num_sources + num_sinks + 1; }
};

FlowNetwork build_network(const SearchInstance& inst);

struct BaselineTimeout : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolveOutcome {
  Schedule schedule;
  double objective = 0.0;
};

// Generic successive-shortest-path min-cost flow with node potentials over
// the explicit network. Slower than the specialized solver by design; this
// is the comparison class, not a reimplementation of any specific library.
SolveOutcome solve_mincost(const FlowNetwork& net, const SearchInstance& inst,
                           std::optional<std::chrono::steady_clock::time_point> deadline = {});

// Exhaustive enumeration oracle for tiny instances, homogeneous (equality
// budgets) or heterogeneous (budgets as upper bounds). Guarded by
// prod_m L_m^{N_m} <= 1e7; throws TooLarge beyond that.
SolveOutcome brute_force(const SearchInstance& inst);

}  // namespace searchalloc
