#include <doctest.h>

#include <random>

#include "searchalloc/baseline.hpp"
#include "searchalloc/flowsolver.hpp"
#include "helpers.hpp"

using namespace searchalloc;
using namespace searchalloc::testing;

namespace {

// Worked instances reused across the solver and certificate suites.
SearchInstance chain_instance() {
  // agent 0 -> {0,1} budget 1; agent 1 -> {1,2} budget 2
  return make_homogeneous(2, 3, {1, 2}, {0.5, 0.3, 0.2}, {0.5, 0.8, 0.6},
                          {{0, 0}, {0, 1}, {1, 1}, {1, 2}});
}

SearchInstance reroute_instance() {
  // agent 0 -> {0,1} budget 1; agent 1 -> {1} budget 1
  return make_homogeneous(2, 2, {1, 1}, {0.6, 0.8}, {0.5, 0.5}, {{0, 0}, {0, 1}, {1, 1}});
}

SearchInstance dead_end_instance() {
  // agent 0 -> {0,1} budget 1; agent 1 -> {0} budget 1
  return make_homogeneous(2, 2, {1, 1}, {0.6, 0.2}, {0.5, 0.5}, {{0, 0}, {0, 1}, {1, 0}});
}

int count_events(const SolveTrace& trace, auto predicate) {
  int n = 0;
  for (const TraceEvent& e : trace.events)
    if (predicate(e)) ++n;
  return n;
}

void check_trace_invariants(const SearchInstance& inst, const SolveResult& result) {
  double previous_cost = -2.0;
  std::vector<char> seen_agent(inst.num_agents, 0), seen_location(inst.num_locations, 0);
  int last_seen_j[64] = {};
  for (const TraceEvent& event : result.trace.events) {
    if (const auto* ex = std::get_if<ExtractionEvent>(&event)) {
      CHECK(-ex->value >= previous_cost - 1e-15);
      previous_cost = -ex->value;
      if (!ex->skipped && ex->location < 64) {
        // per-location prefix order
        CHECK(ex->index == last_seen_j[ex->location] + 1);
        last_seen_j[ex->location] = ex->index;
      }
    } else if (const auto* el = std::get_if<EliminationEvent>(&event)) {
      CHECK(!el->locations.empty());  // the initiating sink is always present
      for (int m : el->agents) {
        CHECK(!seen_agent[m]);  // groups are pairwise disjoint
        seen_agent[m] = 1;
      }
      for (int k : el->locations) {
        CHECK(!seen_location[k]);
        seen_location[k] = 1;
      }
    }
  }

  // Equality budgets at termination.
  std::vector<int> used = result.schedule.agent_totals(inst);
  for (int m = 0; m < inst.num_agents; ++m) CHECK(used[m] == inst.budgets[m]);
  for (size_t a = 0; a < result.schedule.counts.size(); ++a) {
    CHECK(result.schedule.counts[a] >= 0);
    CHECK(result.schedule.counts[a] <= inst.budgets[inst.arcs[a].agent]);
  }
}

}  // namespace

TEST_CASE("minimal instance: the only feasible schedule") {
  SolveResult result = solve(minimal_instance());
  CHECK(result.schedule.counts == std::vector<int>{1});
  CHECK(objective(minimal_instance(), result.schedule) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("worked example: objective 0.61") {
  SearchInstance inst = chain_instance();
  SolveResult result = solve(inst);
  CHECK(objective(inst, result.schedule) == doctest::Approx(0.61).epsilon(1e-12));
  CHECK(result.schedule.counts == std::vector<int>{1, 0, 1, 1});
  check_trace_invariants(inst, result);
}

TEST_CASE("worked example: objective 0.70 with a multi-hop augmentation") {
  SearchInstance inst = reroute_instance();
  SolveResult result = solve(inst);
  CHECK(objective(inst, result.schedule) == doctest::Approx(0.70).epsilon(1e-12));
  // x_{00} = 1 and x_{11} = 1: agent 0's unit is rerouted to location 0.
  CHECK(result.schedule.counts == std::vector<int>{1, 0, 1});

  int multi_hop = count_events(result.trace, [](const TraceEvent& e) {
    const auto* as = std::get_if<AssignmentEvent>(&e);
    return as && as->path.size() >= 4;
  });
  CHECK(multi_hop == 1);

  // The rerouting path is t0 -> s0 -> t1 -> s1 under the documented tie-breaks.
  for (const TraceEvent& e : result.trace.events) {
    const auto* as = std::get_if<AssignmentEvent>(&e);
    if (as && as->path.size() >= 4) {
      std::vector<NodeRef> expected = {{NodeKind::Sink, 0},
                                       {NodeKind::Source, 0},
                                       {NodeKind::Sink, 1},
                                       {NodeKind::Source, 1}};
      CHECK(as->path == expected);
      CHECK(as->agent == 1);
    }
  }
  check_trace_invariants(inst, result);
}

TEST_CASE("worked example: objective 0.45 with an elimination") {
  SearchInstance inst = dead_end_instance();
  SolveResult result = solve(inst);
  CHECK(objective(inst, result.schedule) == doctest::Approx(0.45).epsilon(1e-12));

  // The failed search for location 1's demand sweeps in both agents and
  // both locations as one isolated group at value 0.10.
  bool found = false;
  for (const TraceEvent& e : result.trace.events) {
    if (const auto* el = std::get_if<EliminationEvent>(&e)) {
      if (!found) {
        CHECK(el->agents == std::vector<int>{0, 1});
        CHECK(el->locations == std::vector<int>{0, 1});
        CHECK(el->value == doctest::Approx(0.10).epsilon(1e-12));
      }
      found = true;
    }
  }
  CHECK(found);
  check_trace_invariants(inst, result);
}

TEST_CASE("single-hop assignment when a supplied agent is adjacent") {
  SolveResult result = solve(minimal_instance());
  const auto* as = std::get_if<AssignmentEvent>(&result.trace.events.at(1));
  REQUIRE(as != nullptr);
  CHECK(as->path.size() == 2);
  CHECK(as->agent == 0);
}

TEST_CASE("extractions for eliminated locations are skipped") {
  SolveResult result = solve(dead_end_instance());
  bool saw_skip = false;
  Schedule after_elimination;
  for (const TraceEvent& e : result.trace.events)
    if (const auto* ex = std::get_if<ExtractionEvent>(&e))
      if (ex->skipped) saw_skip = true;
  CHECK(saw_skip);
}

TEST_CASE("solver matches brute force on random tiny instances") {
  std::mt19937_64 rng(100);
  RandomSpec spec;
  spec.max_budget_each = 2;
  for (int i = 0; i < 300; ++i) {
    SearchInstance inst = random_homogeneous(rng, spec);
    REQUIRE(validate(inst).ok());
    SolveResult result = solve(inst);
    SolveOutcome oracle = brute_force(inst);
    double got = objective(inst, result.schedule);
    CHECK(got == doctest::Approx(oracle.objective).epsilon(1e-12));
    check_trace_invariants(inst, result);
  }
}

TEST_CASE("alpha = 1 zero-gain units are still placed") {
  SearchInstance inst = make_homogeneous(1, 1, {3}, {0.5}, {1.0}, {{0, 0}});
  SolveResult result = solve(inst);
  CHECK(result.schedule.counts == std::vector<int>{3});
  CHECK(objective(inst, result.schedule) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("work bound holds on random instances") {
  std::mt19937_64 rng(101);
  RandomSpec spec;
  spec.max_agents = 6;
  spec.max_locations = 10;
  spec.max_budget_each = 5;
  for (int i = 0; i < 100; ++i) {
    SearchInstance inst = random_homogeneous(rng, spec);
    SolveResult result = solve(inst);
    long long arcs = (long long)inst.arcs.size();
    long long bound =
        4LL * (inst.total_budget() * arcs + std::min(inst.num_agents, inst.num_locations) * arcs);
    CHECK(result.stats.bfs_edge_visits <= bound);
  }
}
