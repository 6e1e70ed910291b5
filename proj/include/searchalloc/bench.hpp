#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "searchalloc/flowsolver.hpp"
#include "searchalloc/scenario.hpp"

namespace searchalloc {

struct BenchConfig {
  int sensors = 50;
  int locations = 300;
  double radius = 15.0;
  double width = 100.0;
  double height = 100.0;
  int reps = 5;
  uint64_t seed = 7;
  bool with_baseline = false;
  double timeout_s = 300.0;

  std::vector<int> budgets = {10, 20, 30, 40, 50, 60, 70, 80, 90};  // budget sweep
  int budget = 50;                                                  // sparsity sweep
  std::vector<double> radii = {15.0, 17.5, 20.0, 22.5, 25.0, 27.5, 30.0};
};

// CSV schema: sweep,param,abs_A,solver,rep,seconds,objective
struct BenchRow {
  std::string sweep;
  double param = 0.0;
  long long abs_A = 0;
  std::string solver;
  int rep = 0;
  double seconds = 0.0;
  double objective = 0.0;
};

using RowSink = std::function<void(const BenchRow&)>;

// One row per (param, solver, rep); instance generation and I/O are outside
// the timed region, and solvers run one at a time. The two solvers'
// objectives must agree to 1e-9 relative on every row.
std::vector<BenchRow> run_budget_sweep(const BenchConfig& config, const RowSink& sink = {});
std::vector<BenchRow> run_sparsity_sweep(const BenchConfig& config, const RowSink& sink = {});

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const BenchRow& row);

// Instrumented solve checked against the O(N|A| + min(M,K)|A|) work bound
// with constant c = 4; full-access instances tighten to c(N + |A|).
struct AuditResult {
  SolveStats stats;
  long long edge_visit_bound = 0;
  bool within_bound = false;
};

inline constexpr int kAuditConstant = 4;

AuditResult complexity_audit(const SearchInstance& inst);

double median(std::vector<double> values);

}  // namespace searchalloc
