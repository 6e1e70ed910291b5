#include "searchalloc/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <limits>
#include <queue>

namespace searchalloc {

FlowNetwork build_network(const SearchInstance& inst) {
  if (!inst.homogeneous())
    throw std::invalid_argument("flow network requires a homogeneous detection model");
  FlowNetwork net;
  net.num_sources = inst.num_agents;
  net.num_sinks = inst.num_locations;
  net.supplies = inst.budgets;

  const int total = inst.total_budget();
  if ((long long)inst.num_locations * total > 10'000'000)
    std::cerr << "warning: explicit network has " << (long long)inst.num_locations * total
              << " unit arcs\n";

  net.arcs.reserve(inst.arcs.size() + (size_t)inst.num_locations * total);
  for (size_t a = 0; a < inst.arcs.size(); ++a) {
    const Arc& arc = inst.arcs[a];
    net.arcs.push_back({net.source_node(arc.agent), net.sink_node(arc.location),
                        inst.budgets[arc.agent], 0.0, (int)a});
  }
  for (int k = 0; k < inst.num_locations; ++k) {
    double p = inst.priors[k] * inst.detection.alpha[k];
    for (int j = 1; j <= total; ++j) {
      net.arcs.push_back({net.sink_node(k), net.global_sink(), 1, -p, -1});
      p *= 1.0 - inst.detection.alpha[k];
    }
  }
  return net;
}

namespace {

struct ResidualGraph {
  // Paired arcs: arc i and i^1 are each other's reverse.
  std::vector<int> to, cap;
  std::vector<double> cost;
  std::vector<std::vector<int>> out;

  void add(int from, int to_node, int capacity, double c) {
    out[from].push_back((int)to.size());
    to.push_back(to_node);
    cap.push_back(capacity);
    cost.push_back(c);
    out[to_node].push_back((int)to.size());
    to.push_back(from);
    cap.push_back(0);
    cost.push_back(-c);
  }
};

}  // namespace

SolveOutcome solve_mincost(const FlowNetwork& net, const SearchInstance& inst,
                           std::optional<std::chrono::steady_clock::time_point> deadline) {
  const int super = net.node_count();
  const int nodes = super + 1;
  const int target = net.global_sink();

  ResidualGraph g;
  g.out.resize(nodes);
  std::vector<int> accessibility_arc;  // residual index per instance arc
  accessibility_arc.resize(inst.arcs.size(), -1);
  for (const auto& arc : net.arcs) {
    if (arc.instance_arc >= 0) accessibility_arc[arc.instance_arc] = (int)g.to.size();
    g.add(arc.from, arc.to, arc.capacity, arc.cost);
  }
  for (int m = 0; m < net.num_sources; ++m) g.add(super, net.source_node(m), net.supplies[m], 0.0);

  // Initial potentials in a single pass: the network is layered
  // super -> sources -> sinks -> global, and only the last layer is negative.
  std::vector<double> pot(nodes, 0.0);
  double most_negative = 0.0;
  for (const auto& arc : net.arcs)
    if (arc.instance_arc < 0) most_negative = std::min(most_negative, arc.cost);
  pot[target] = most_negative;

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(nodes);
  std::vector<int> parent_arc(nodes);
  int remaining = 0;
  for (int s : net.supplies) remaining += s;

  while (remaining > 0) {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
      throw BaselineTimeout("min-cost flow solve exceeded its deadline");

    std::fill(dist.begin(), dist.end(), inf);
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    dist[super] = 0.0;
    using QEntry = std::pair<double, int>;
    std::priority_queue<QEntry, std::vector<QEntry>, std::greater<QEntry>> pq;
    pq.push({0.0, super});
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d > dist[v]) continue;
      for (int e : g.out[v]) {
        if (g.cap[e] <= 0) continue;
        int w = g.to[e];
        double reduced = std::max(0.0, g.cost[e] + pot[v] - pot[w]);
        if (d + reduced < dist[w]) {
          dist[w] = d + reduced;
          parent_arc[w] = e;
          pq.push({dist[w], w});
        }
      }
    }
    if (dist[target] == inf)
      throw std::logic_error("min-cost flow: no augmenting path with supply remaining");

    for (int v = 0; v < nodes; ++v)
      if (dist[v] < inf) pot[v] += dist[v];

    int bottleneck = remaining;
    for (int v = target; v != super; v = g.to[parent_arc[v] ^ 1])
      bottleneck = std::min(bottleneck, g.cap[parent_arc[v]]);
    for (int v = target; v != super; v = g.to[parent_arc[v] ^ 1]) {
      g.cap[parent_arc[v]] -= bottleneck;
      g.cap[parent_arc[v] ^ 1] += bottleneck;
    }
    remaining -= bottleneck;
  }

  SolveOutcome out;
  out.schedule.counts.resize(inst.arcs.size(), 0);
  for (size_t a = 0; a < inst.arcs.size(); ++a)
    out.schedule.counts[a] = g.cap[accessibility_arc[a] ^ 1];  // flow = reverse capacity
  out.objective = objective(inst, out.schedule);
  return out;
}

SolveOutcome brute_force(const SearchInstance& inst) {
  AdjacencyIndex adj(inst);

  double log_count = 0.0;
  for (int m = 0; m < inst.num_agents; ++m)
    log_count += inst.budgets[m] * std::log((double)std::max<size_t>(1, adj.locations_of[m].size()));
  if (log_count > std::log(1e7))
    throw TooLarge("brute force guard: search space exceeds 1e7 candidates");

  const bool equality = inst.homogeneous();
  Schedule current;
  current.counts.assign(inst.arcs.size(), 0);
  SolveOutcome best;
  best.schedule.counts = current.counts;
  best.objective = -1.0;

  std::function<void(int)> per_agent = [&](int m) {
    if (m == inst.num_agents) {
      double value = objective(inst, current);
      if (value > best.objective) {
        best.objective = value;
        best.schedule = current;
      }
      return;
    }
    const auto& arcs_m = adj.locations_of[m];
    if (arcs_m.empty()) {
      per_agent(m + 1);
      return;
    }
    std::function<void(size_t, int)> distribute = [&](size_t i, int remaining) {
      if (i + 1 == arcs_m.size()) {
        int lo = equality ? remaining : 0;
        for (int c = lo; c <= remaining; ++c) {
          current.counts[arcs_m[i].second] = c;
          per_agent(m + 1);
        }
        current.counts[arcs_m[i].second] = 0;
        return;
      }
      for (int c = 0; c <= remaining; ++c) {
        current.counts[arcs_m[i].second] = c;
        distribute(i + 1, remaining - c);
      }
      current.counts[arcs_m[i].second] = 0;
    };
    distribute(0, inst.budgets[m]);
  };
  per_agent(0);
  return best;
}

}  // namespace searchalloc
