#include <doctest.h>

#include <random>

#include "searchalloc/baseline.hpp"
#include "searchalloc/greedy.hpp"
#include "helpers.hpp"

using namespace searchalloc;
using namespace searchalloc::testing;

namespace {

// Full-access 2x2 heterogeneous instance with unit budgets.
SearchInstance square_instance() {
  return make_heterogeneous(2, 2, {1, 1}, {0.5, 0.5}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}},
                            {0.9, 0.5, 0.4, 0.6});
}

}  // namespace

TEST_CASE("objective of small assignment sets") {
  SearchInstance inst = square_instance();
  AssignmentSet empty{{0, 0, 0, 0}};
  CHECK(f_value(empty, inst) == 0.0);

  AssignmentSet one{{1, 0, 0, 0}};  // agent 0 at location 0, alpha 0.9
  CHECK(f_value(one, inst) == doctest::Approx(0.45).epsilon(1e-12));

  AssignmentSet two{{1, 0, 1, 0}};  // both agents at location 0
  CHECK(f_value(two, inst) == doctest::Approx(0.47).epsilon(1e-12));
}

TEST_CASE("worked example: greedy splits the agents, objective 0.75") {
  SearchInstance inst = square_instance();
  Schedule s = greedy_solve(inst);
  CHECK(s.counts == std::vector<int>{1, 0, 0, 1});
  CHECK(f_value({s.counts}, inst) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("lazy greedy equals naive greedy exactly") {
  std::mt19937_64 rng(400);
  RandomSpec spec;
  spec.max_agents = 5;
  spec.max_locations = 8;
  spec.max_budget_each = 4;
  for (int i = 0; i < 500; ++i) {
    SearchInstance inst = random_heterogeneous(rng, spec);
    Schedule lazy = greedy_solve(inst);
    Schedule naive = naive_greedy(inst);
    CHECK(f_value({lazy.counts}, inst) == f_value({naive.counts}, inst));
  }
}

TEST_CASE("greedy achieves at least half the optimum") {
  std::mt19937_64 rng(401);
  RandomSpec spec;
  spec.max_budget_each = 2;
  for (int i = 0; i < 200; ++i) {
    SearchInstance inst = random_heterogeneous(rng, spec);
    double got = f_value({greedy_solve(inst).counts}, inst);
    double opt = brute_force(inst).objective;
    CHECK(got >= 0.5 * opt - 1e-12);
  }
}

TEST_CASE("re-keying to a weaker accessor is exercised") {
  // Agent 0 (alpha 0.9) has budget 1 and two locations; after its unit is
  // spent the heap entry for the untouched location must re-key to agent 1
  // (alpha 0.3) rather than drop.
  SearchInstance inst = make_heterogeneous(2, 2, {1, 1}, {0.5, 0.45},
                                           {{0, 0}, {0, 1}, {1, 1}}, {0.9, 0.9, 0.3});
  Schedule s = greedy_solve(inst);
  CHECK(s.counts == std::vector<int>{1, 0, 1});
  CHECK(f_value({s.counts}, inst) ==
        doctest::Approx(0.5 * 0.9 + 0.45 * 0.3).epsilon(1e-12));
}

TEST_CASE("mismatched assignment sets are rejected") {
  SearchInstance inst = square_instance();
  CHECK_THROWS_AS(f_value({{1, 0}}, inst), InfeasibleSet);
  CHECK_THROWS_AS(f_value({{2, 0, 0, 0}}, inst), InfeasibleSet);  // over budget
}

TEST_CASE("objective is submodular and budgets form a matroid") {
  std::mt19937_64 rng(402);
  RandomSpec spec;
  spec.max_agents = 4;
  spec.max_locations = 5;
  spec.max_budget_each = 3;
  for (int i = 0; i < 20; ++i) {
    SearchInstance inst = random_heterogeneous(rng, spec);
    PropertyVerdict sub = check_submodular(inst, 200, 402 + i);
    if (!sub.pass) MESSAGE(sub.counterexample);
    CHECK(sub.pass);
    PropertyVerdict mat = check_matroid(inst, 200, 900 + i);
    if (!mat.pass) MESSAGE(mat.counterexample);
    CHECK(mat.pass);
  }
}

TEST_CASE("greedy on homogeneous instances matches the exact solver's order") {
  // With agent-independent alpha the greedy is the Song-Teneketzis rule and
  // is optimal under full access.
  std::mt19937_64 rng(403);
  RandomSpec spec;
  spec.full_access = true;
  spec.max_budget_each = 3;
  for (int i = 0; i < 50; ++i) {
    SearchInstance inst = random_homogeneous(rng, spec);
    SearchInstance hetero = inst;
    hetero.detection.kind = DetectionKind::Heterogeneous;
    hetero.detection.alpha.clear();
    for (const Arc& arc : inst.arcs)
      hetero.detection.alpha.push_back(inst.detection.alpha[arc.location]);
    double got = f_value({greedy_solve(hetero).counts}, hetero);
    double opt = brute_force(inst).objective;
    CHECK(got == doctest::Approx(opt).epsilon(1e-12));
  }
}
