#pragma once

#include <string>
#include <vector>

#include "searchalloc/flowsolver.hpp"
#include "searchalloc/model.hpp"

namespace searchalloc {

// Dual prices reconstructed from a solve trace. Within each isolated group
// every member carries the same price, the negated triggering extraction
// value; the global sink price is fixed at 0.
struct Certificate {
  struct Group {
    std::vector<int> agents;
    std::vector<int> locations;
    double value;  // triggering p_{k,j*}
  };

  std::vector<double> source_price;  // d^s_m
  std::vector<double> sink_price;    // d^t_k
  double lambda = 0.0;
  std::vector<Group> groups;         // in elimination order
};

struct MalformedTrace : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Certificate build_certificate(const SolveTrace& trace, const SearchInstance& inst);

// Optimality check: dual feasibility, the five complementary slackness
// conditions, and strong duality, each at tolerance 1e-9. Violations are
// data, not exceptions, so mutated inputs can be probed.
struct Verdict {
  bool pass = true;
  std::vector<std::string> violations;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
};

Verdict verify(const Schedule& schedule, const Certificate& cert, const SearchInstance& inst);

}  // namespace searchalloc
