#include "searchalloc/flowsolver.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

namespace searchalloc {
namespace {

// cost = -p_{kj}; ties broken by (location, j) ascending for determinism.
using HeapEntry = std::tuple<double, int, int>;
using MinHeap = std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>>;

struct Pred {
  int node = -1;  // predecessor on the other side of the bipartition
  int arc = -1;
  uint32_t stamp = 0;
};

struct SolverState {
  const SearchInstance& inst;
  AdjacencyIndex adj;
  std::vector<int> residual;       // R_m, never increases
  std::vector<int> x;              // per arc
  std::vector<char> elim_agent;
  std::vector<char> elim_location;
  // Dead-prefix pointer into agents_of[k]: everything before it has R = 0.
  std::vector<size_t> live_ptr;
  std::vector<Pred> pred_source;   // per agent: enqueuing (location, arc)
  std::vector<Pred> pred_sink;     // per location: enqueuing (agent, arc)
  uint32_t stamp = 0;
  SolveStats stats;

  explicit SolverState(const SearchInstance& instance)
      : inst(instance),
        adj(instance),
        residual(instance.budgets),
        x(instance.arcs.size(), 0),
        elim_agent(instance.num_agents, 0),
        elim_location(instance.num_locations, 0),
        live_ptr(instance.num_locations, 0),
        pred_source(instance.num_agents),
        pred_sink(instance.num_locations) {}
};

struct PathSearchResult {
  bool found = false;
  int agent = -1;
  std::vector<NodeRef> path;     // demanded sink ... terminal source
  std::vector<NodeRef> visited;  // on failure: the isolated group
};

// Breadth-first search for an augmenting path from sink t to a source with
// residual supply. Sources of a sink are scanned in ascending agent index and
// the first one with supply short-circuits the scan; sinks of a source are
// reachable only through arcs carrying positive flow. Eliminated nodes are
// skipped, which is the "shrunk graph". On success the path is augmented
// (+1 on sink->source hops, -1 on the flow-carrying source->sink hops).
PathSearchResult assign_extra_demand(SolverState& s, int t) {
  ++s.stamp;
  std::vector<NodeRef> queue;
  queue.push_back({NodeKind::Sink, t});
  s.pred_sink[t].stamp = s.stamp;
  s.pred_sink[t].node = -1;

  auto augment = [&](int mstar, int first_arc, int first_loc) {
    PathSearchResult res;
    res.found = true;
    res.agent = mstar;
    int m = mstar, k = first_loc, arc = first_arc;
    res.path.push_back({NodeKind::Source, m});
    while (true) {
      s.x[arc] += 1;
      res.path.push_back({NodeKind::Sink, k});
      if (s.pred_sink[k].node < 0) break;  // reached the demanded sink
      m = s.pred_sink[k].node;
      s.x[s.pred_sink[k].arc] -= 1;
      res.path.push_back({NodeKind::Source, m});
      k = s.pred_source[m].node;
      arc = s.pred_source[m].arc;
    }
    std::reverse(res.path.begin(), res.path.end());
    ++s.stats.augmentations;
    return res;
  };

  for (size_t head = 0; head < queue.size(); ++head) {
    NodeRef node = queue[head];
    if (node.kind == NodeKind::Sink) {
      int k = node.index;
      const auto& agents = s.adj.agents_of[k];
      size_t& ptr = s.live_ptr[k];
      while (ptr < agents.size() && s.residual[agents[ptr].first] == 0) {
        ++ptr;
        ++s.stats.bfs_edge_visits;
      }
      if (ptr < agents.size()) {
        // First source in ascending order with supply: augmenting path found.
        ++s.stats.bfs_edge_visits;
        int mstar = agents[ptr].first;
        return augment(mstar, agents[ptr].second, k);
      }
      for (const auto& [m, arc] : agents) {
        ++s.stats.bfs_edge_visits;
        if (s.elim_agent[m] || s.pred_source[m].stamp == s.stamp) continue;
        s.pred_source[m] = {k, arc, s.stamp};
        queue.push_back({NodeKind::Source, m});
      }
    } else {
      int m = node.index;  // enqueued sources always have R_m = 0
      for (const auto& [k, arc] : s.adj.locations_of[m]) {
        ++s.stats.bfs_edge_visits;
        if (s.x[arc] == 0 || s.elim_location[k] || s.pred_sink[k].stamp == s.stamp) continue;
        s.pred_sink[k] = {m, arc, s.stamp};
        queue.push_back({NodeKind::Sink, k});
      }
    }
  }

  PathSearchResult res;
  res.visited = std::move(queue);
  return res;
}

void eliminate_group(SolverState& s, const std::vector<NodeRef>& visited) {
  for (const NodeRef& n : visited) {
    if (n.kind == NodeKind::Source)
      s.elim_agent[n.index] = 1;
    else
      s.elim_location[n.index] = 1;
  }
  ++s.stats.eliminations;
}

}  // namespace

SolveResult solve(const SearchInstance& inst) {
  if (!inst.homogeneous())
    throw std::invalid_argument("flow solver requires a homogeneous detection model");

  SolverState s(inst);
  SolveTrace trace;
  MinHeap heap;

  // p_{kj} is generated lazily by incremental multiplication.
  std::vector<double> current(inst.num_locations);
  for (int k = 0; k < inst.num_locations; ++k) {
    current[k] = inst.priors[k] * inst.detection.alpha[k];
    heap.push({-current[k], k, 1});
    ++s.stats.heap_pushes;
  }

  double last_value = 0.0;
  while (!heap.empty()) {
    auto [cost, k, j] = heap.top();
    heap.pop();
    ++s.stats.heap_pops;
    double p = -cost;
    last_value = p;
    bool skipped = s.elim_location[k] != 0;
    trace.events.push_back(ExtractionEvent{k, j, p, skipped});
    if (skipped) continue;

    PathSearchResult r = assign_extra_demand(s, k);
    if (r.found) {
      s.residual[r.agent] -= 1;
      trace.events.push_back(AssignmentEvent{std::move(r.path), r.agent});
      current[k] *= 1.0 - inst.detection.alpha[k];
      heap.push({-current[k], k, j + 1});
      ++s.stats.heap_pushes;
    } else {
      eliminate_group(s, r.visited);
      EliminationEvent ev;
      ev.value = p;
      for (const NodeRef& n : r.visited)
        (n.kind == NodeKind::Source ? ev.agents : ev.locations).push_back(n.index);
      std::sort(ev.agents.begin(), ev.agents.end());
      std::sort(ev.locations.begin(), ev.locations.end());
      trace.events.push_back(std::move(ev));
    }
  }
  trace.events.push_back(TerminationEvent{last_value});

  // The accessibility assumption guarantees all supply is placed.
  for (int m = 0; m < inst.num_agents; ++m)
    if (s.residual[m] != 0)
      throw std::logic_error("solver bug: agent " + std::to_string(m) +
                             " has unassigned supply at termination");

  SolveResult result;
  result.schedule.counts = std::move(s.x);
  result.trace = std::move(trace);
  result.stats = s.stats;
  return result;
}

}  // namespace searchalloc
