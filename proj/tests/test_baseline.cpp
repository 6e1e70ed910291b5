#include <doctest.h>

#include <random>

#include "searchalloc/baseline.hpp"
#include "searchalloc/flowsolver.hpp"
#include "helpers.hpp"

using namespace searchalloc;
using namespace searchalloc::testing;

TEST_CASE("network shape for the minimal instance") {
  FlowNetwork net = build_network(minimal_instance());
  CHECK(net.node_count() == 3);
  REQUIRE(net.arcs.size() == 2);
  CHECK(net.arcs[0].cost == 0.0);
  CHECK(net.arcs[0].capacity == 1);
  CHECK(net.arcs[1].cost == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(net.arcs[1].capacity == 1);
}

TEST_CASE("network arc counts: |A| zero-cost plus K*N unit arcs") {
  SearchInstance inst = make_homogeneous(2, 3, {1, 2}, {0.5, 0.3, 0.2}, {0.5, 0.8, 0.6},
                                         {{0, 0}, {0, 1}, {1, 1}, {1, 2}});
  FlowNetwork net = build_network(inst);
  CHECK(net.arcs.size() == 4 + 3 * 3);

  // Unit-arc costs are nondecreasing in j for each location.
  for (int k = 0; k < 3; ++k) {
    double previous = -1.0;
    for (const auto& arc : net.arcs) {
      if (arc.instance_arc >= 0 || arc.from != net.sink_node(k)) continue;
      CHECK(arc.cost >= previous);
      previous = arc.cost;
    }
  }
}

TEST_CASE("min-cost flow reproduces the worked objectives") {
  SearchInstance chain = make_homogeneous(2, 3, {1, 2}, {0.5, 0.3, 0.2}, {0.5, 0.8, 0.6},
                                          {{0, 0}, {0, 1}, {1, 1}, {1, 2}});
  CHECK(solve_mincost(build_network(chain), chain).objective ==
        doctest::Approx(0.61).epsilon(1e-12));

  SearchInstance reroute =
      make_homogeneous(2, 2, {1, 1}, {0.6, 0.8}, {0.5, 0.5}, {{0, 0}, {0, 1}, {1, 1}});
  CHECK(solve_mincost(build_network(reroute), reroute).objective ==
        doctest::Approx(0.70).epsilon(1e-12));

  CHECK(solve_mincost(build_network(minimal_instance()), minimal_instance()).objective ==
        doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("brute force on the worked instances") {
  SearchInstance chain = make_homogeneous(2, 3, {1, 2}, {0.5, 0.3, 0.2}, {0.5, 0.8, 0.6},
                                          {{0, 0}, {0, 1}, {1, 1}, {1, 2}});
  CHECK(brute_force(chain).objective == doctest::Approx(0.61).epsilon(1e-12));

  SearchInstance dead_end =
      make_homogeneous(2, 2, {1, 1}, {0.6, 0.2}, {0.5, 0.5}, {{0, 0}, {0, 1}, {1, 0}});
  CHECK(brute_force(dead_end).objective == doctest::Approx(0.45).epsilon(1e-12));
}

TEST_CASE("single-agent full access: optimum is the top-N marginal prefix") {
  std::mt19937_64 rng(300);
  RandomSpec spec;
  spec.max_agents = 1;
  spec.max_locations = 5;
  spec.max_budget_each = 5;
  spec.full_access = true;
  for (int i = 0; i < 50; ++i) {
    SearchInstance inst = random_homogeneous(rng, spec);
    int total = inst.total_budget();
    std::vector<double> values;
    for (int k = 0; k < inst.num_locations; ++k)
      for (int j = 1; j <= total; ++j) values.push_back(marginal_value(inst, k, j));
    std::sort(values.rbegin(), values.rend());
    double top = 0.0;
    for (int j = 0; j < total; ++j) top += values[j];
    CHECK(brute_force(inst).objective == doctest::Approx(top).epsilon(1e-12));
  }
}

TEST_CASE("brute force guard") {
  SearchInstance inst = make_homogeneous(3, 10, {40, 40, 40}, std::vector<double>(10, 0.1),
                                         std::vector<double>(10, 0.5), [] {
                                           std::vector<Arc> arcs;
                                           for (int m = 0; m < 3; ++m)
                                             for (int k = 0; k < 10; ++k) arcs.push_back({m, k});
                                           return arcs;
                                         }());
  CHECK_THROWS_AS(brute_force(inst), TooLarge);
}

TEST_CASE("three solvers agree on random instances") {
  std::mt19937_64 rng(301);
  RandomSpec spec;
  spec.max_agents = 4;
  spec.max_locations = 5;
  spec.max_budget_each = 2;
  for (int i = 0; i < 150; ++i) {
    SearchInstance inst = random_homogeneous(rng, spec);
    double specialized = objective(inst, solve(inst).schedule);
    SolveOutcome generic = solve_mincost(build_network(inst), inst);
    double oracle = brute_force(inst).objective;
    CHECK(specialized == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(generic.objective == doctest::Approx(oracle).epsilon(1e-9));

    // Integral flow within budgets and arcs.
    std::vector<int> used = generic.schedule.agent_totals(inst);
    for (int m = 0; m < inst.num_agents; ++m) CHECK(used[m] == inst.budgets[m]);
  }
}

TEST_CASE("baseline honors its deadline") {
  std::mt19937_64 rng(302);
  RandomSpec spec;
  spec.max_agents = 8;
  spec.max_locations = 30;
  spec.max_budget_each = 30;
  SearchInstance inst = random_homogeneous(rng, spec);
  auto past = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK_THROWS_AS(solve_mincost(build_network(inst), inst, past), BaselineTimeout);
}
