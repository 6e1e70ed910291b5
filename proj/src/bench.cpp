#include "searchalloc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "searchalloc/baseline.hpp"

namespace searchalloc {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void emit(std::vector<BenchRow>& rows, const RowSink& sink, BenchRow row) {
  if (sink) sink(row);
  rows.push_back(std::move(row));
}

void check_agreement(double specialized, double generic) {
  double scale = std::max({1.0, std::abs(specialized), std::abs(generic)});
  if (std::abs(specialized - generic) > 1e-9 * scale) {
    std::ostringstream os;
    os << "benchmark objective mismatch: specialized " << specialized << " vs baseline "
       << generic;
    throw std::runtime_error(os.str());
  }
}

void run_point(const SearchInstance& inst, const BenchConfig& config, const std::string& sweep,
               double param, std::vector<BenchRow>& rows, const RowSink& sink) {
  const long long arcs = (long long)inst.arcs.size();

  for (int rep = 0; rep < config.reps; ++rep) {
    auto start = Clock::now();
    SolveResult result = solve(inst);
    double elapsed = seconds_since(start);
    double specialized_objective = objective(inst, result.schedule);
    emit(rows, sink, {sweep, param, arcs, "specialized", rep, elapsed, specialized_objective});

    if (config.with_baseline) {
      FlowNetwork net = build_network(inst);
      auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(config.timeout_s));
      start = Clock::now();
      SolveOutcome baseline = solve_mincost(net, inst, deadline);
      elapsed = seconds_since(start);
      check_agreement(specialized_objective, baseline.objective);
      emit(rows, sink, {sweep, param, arcs, "baseline", rep, elapsed, baseline.objective});
    }
  }
}

}  // namespace

std::vector<BenchRow> run_budget_sweep(const BenchConfig& config, const RowSink& sink) {
  SpatialField field = generate_field(config.sensors, config.locations, config.radius,
                                      config.width, config.height, config.seed);
  std::vector<BenchRow> rows;
  for (int budget : config.budgets) {
    CompileOptions opts;
    opts.budget_each = budget;
    opts.seed = config.seed + 1;
    SearchInstance inst = compile_instance(field, opts);
    run_point(inst, config, "budget", budget, rows, sink);
  }
  return rows;
}

std::vector<BenchRow> run_sparsity_sweep(const BenchConfig& config, const RowSink& sink) {
  // One fixed field across the whole sweep; only the radius threshold moves.
  SpatialField field = generate_field(config.sensors, config.locations, config.radius,
                                      config.width, config.height, config.seed);
  std::vector<BenchRow> rows;
  long long previous_arcs = -1;
  for (double radius : config.radii) {
    field.radius = radius;
    CompileOptions opts;
    opts.budget_each = config.budget;
    opts.seed = config.seed + 1;
    SearchInstance inst = compile_instance(field, opts);
    if ((long long)inst.arcs.size() < previous_arcs)
      throw std::logic_error("arc count decreased along the radius sweep");
    previous_arcs = (long long)inst.arcs.size();
    run_point(inst, config, "sparsity", radius, rows, sink);
  }
  return rows;
}

void write_csv_header(std::ostream& os) { os << "sweep,param,abs_A,solver,rep,seconds,objective\n"; }

void write_csv_row(std::ostream& os, const BenchRow& row) {
  os << row.sweep << ',' << row.param << ',' << row.abs_A << ',' << row.solver << ',' << row.rep
     << ',' << row.seconds << ',' << row.objective << '\n';
}

AuditResult complexity_audit(const SearchInstance& inst) {
  AuditResult audit;
  SolveResult result = solve(inst);
  audit.stats = result.stats;

  const long long arcs = (long long)inst.arcs.size();
  const long long total = inst.total_budget();
  const long long min_mk = std::min(inst.num_agents, inst.num_locations);
  bool full_access = arcs == (long long)inst.num_agents * inst.num_locations;
  audit.edge_visit_bound = full_access ? kAuditConstant * (total + arcs)
                                       : kAuditConstant * (total * arcs + min_mk * arcs);
  audit.within_bound = audit.stats.bfs_edge_visits <= audit.edge_visit_bound;
  return audit;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  size_t n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace searchalloc
