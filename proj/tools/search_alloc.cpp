// Command-line front end: solve, solve-greedy, baseline, verify, gen, bench.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 bad input.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "searchalloc/baseline.hpp"
#include "searchalloc/bench.hpp"
#include "searchalloc/certificate.hpp"
#include "searchalloc/flowsolver.hpp"
#include "searchalloc/greedy.hpp"
#include "searchalloc/json_io.hpp"
#include "searchalloc/model.hpp"
#include "searchalloc/scenario.hpp"

namespace {

using namespace searchalloc;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadInput = 3;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SearchInstance load_instance(const std::string& path) {
  SearchInstance inst = instance_from_json(load_json_file(path));
  ValidationReport report = validate(inst);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  if (!report.ok()) throw BadInput(path + ":\n" + report.to_string());
  return inst;
}

void write_schedule(const std::string& path, const SearchInstance& inst, const Schedule& s) {
  nlohmann::json j = schedule_to_json(inst, s);
  if (path.empty() || path == "-")
    std::cout << j.dump(2) << "\n";
  else
    save_json_file(path, j);
}

int cmd_solve(const std::string& instance_path, const std::string& out,
              const std::string& trace_out, bool self_verify) {
  SearchInstance inst = load_instance(instance_path);
  if (!inst.homogeneous())
    throw BadInput("instance has per-arc detection probabilities; use solve-greedy");

  SolveResult result = solve(inst);
  write_schedule(out, inst, result.schedule);
  if (!trace_out.empty()) save_json_file(trace_out, trace_to_json(result.trace, inst));
  if (self_verify) {
    Certificate cert = build_certificate(result.trace, inst);
    Verdict verdict = verify(result.schedule, cert, inst);
    if (!verdict.pass) {
      std::cout << verdict_to_json(verdict).dump(2) << "\n";
      return kExitVerifyFailed;
    }
    std::cerr << "certificate: optimal, objective " << verdict.primal_objective << "\n";
  }
  return kExitOk;
}

int cmd_solve_greedy(const std::string& instance_path, const std::string& out, bool oracle_check) {
  SearchInstance inst = load_instance(instance_path);
  if (inst.homogeneous())
    throw BadInput("instance has per-location detection probabilities; use solve");
  Schedule schedule = greedy_solve(inst);
  write_schedule(out, inst, schedule);
  if (oracle_check) {
    Schedule reference = naive_greedy(inst);
    if (objective(inst, schedule) != objective(inst, reference)) {
      std::cerr << "lazy greedy disagrees with the rescanning greedy\n";
      return kExitVerifyFailed;
    }
    std::cerr << "oracle check: lazy and rescanning greedy agree\n";
  }
  return kExitOk;
}

int cmd_baseline(const std::string& instance_path, const std::string& out, bool oracle) {
  SearchInstance inst = load_instance(instance_path);
  SolveOutcome outcome;
  if (oracle) {
    outcome = brute_force(inst);
  } else {
    if (!inst.homogeneous())
      throw BadInput("the min-cost-flow baseline needs a homogeneous instance");
    outcome = solve_mincost(build_network(inst), inst);
  }
  write_schedule(out, inst, outcome.schedule);
  return kExitOk;
}

int cmd_verify(const std::string& instance_path, const std::string& schedule_path,
               const std::string& trace_path) {
  SearchInstance inst = load_instance(instance_path);
  Schedule schedule = schedule_from_json(load_json_file(schedule_path), inst);
  SolveTrace trace = trace_from_json(load_json_file(trace_path), inst);
  Certificate cert = build_certificate(trace, inst);
  Verdict verdict = verify(schedule, cert, inst);
  std::cout << verdict_to_json(verdict).dump(2) << "\n";
  return verdict.pass ? kExitOk : kExitVerifyFailed;
}

struct GenArgs {
  int sensors = 9;
  int locations = 30;
  double radius = 15.0;
  double width = 100.0;
  double height = 100.0;
  int budget = 1;
  uint64_t seed = 42;
  bool hetero = false;
  double alpha_min = 0.1;
  double alpha_max = 0.9;
  std::string out;
  std::string field_out;
  std::string field_in;
  bool radius_set = false;
};

int cmd_gen(const GenArgs& args) {
  SpatialField field;
  if (!args.field_in.empty()) {
    field = field_from_json(load_json_file(args.field_in));
    if (args.radius_set) field.radius = args.radius;
  } else {
    field = generate_field(args.sensors, args.locations, args.radius, args.width, args.height,
                           args.seed);
  }
  CompileOptions opts;
  opts.budget_each = args.budget;
  opts.heterogeneous = args.hetero;
  opts.alpha_min = args.alpha_min;
  opts.alpha_max = args.alpha_max;
  opts.seed = args.seed + 1;
  SearchInstance inst = compile_instance(field, opts);

  ValidationReport report = validate(inst);
  if (!report.ok()) throw BadInput("generated instance failed validation:\n" + report.to_string());
  if (args.out.empty() || args.out == "-")
    std::cout << instance_to_json(inst).dump(2) << "\n";
  else
    save_json_file(args.out, instance_to_json(inst));
  if (!args.field_out.empty()) save_json_file(args.field_out, field_to_json(field));
  return kExitOk;
}

int cmd_bench(const BenchConfig& config, const std::string& mode, const std::string& csv_path) {
  std::ofstream csv;
  std::ostream* os = &std::cout;
  if (!csv_path.empty() && csv_path != "-") {
    csv.open(csv_path);
    if (!csv) throw BadInput("cannot write " + csv_path);
    os = &csv;
  }
  write_csv_header(*os);
  RowSink sink = [&](const BenchRow& row) {
    write_csv_row(*os, row);
    os->flush();  // keep partial results on aborted sweeps
  };
  if (mode == "budget")
    run_budget_sweep(config, sink);
  else
    run_sparsity_sweep(config, sink);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse multi-agent discrete search allocation"};
  app.require_subcommand(1);

  std::string instance_path, out_path, trace_path, schedule_path;
  bool self_verify = false, oracle_check = false, oracle = false;

  auto* solve_cmd = app.add_subcommand("solve", "Exact solver for homogeneous instances");
  solve_cmd->add_option("--instance", instance_path, "Instance JSON")->required();
  solve_cmd->add_option("--out", out_path, "Schedule JSON output ('-' for stdout)");
  solve_cmd->add_option("--emit-trace", trace_path, "Write the solve trace as JSON");
  solve_cmd->add_flag("--verify", self_verify, "Build and check the optimality certificate");

  auto* greedy_cmd = app.add_subcommand("solve-greedy", "1/2-approximation for heterogeneous instances");
  greedy_cmd->add_option("--instance", instance_path, "Instance JSON")->required();
  greedy_cmd->add_option("--out", out_path, "Schedule JSON output");
  greedy_cmd->add_flag("--oracle-check", oracle_check, "Cross-check against the rescanning greedy");

  auto* baseline_cmd = app.add_subcommand("baseline", "Generic min-cost-flow solver");
  baseline_cmd->add_option("--instance", instance_path, "Instance JSON")->required();
  baseline_cmd->add_option("--out", out_path, "Schedule JSON output");
  baseline_cmd->add_flag("--oracle", oracle, "Brute-force enumeration (tiny instances only)");

  auto* verify_cmd = app.add_subcommand("verify", "Check a schedule against a solve trace");
  verify_cmd->add_option("--instance", instance_path, "Instance JSON")->required();
  verify_cmd->add_option("--schedule", schedule_path, "Schedule JSON")->required();
  verify_cmd->add_option("--trace", trace_path, "Trace JSON")->required();

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random spatial-field instance");
  gen_cmd->add_option("--sensors", gen_args.sensors);
  gen_cmd->add_option("--locations", gen_args.locations);
  gen_cmd->add_option("--radius", gen_args.radius);
  gen_cmd->add_option("--width", gen_args.width);
  gen_cmd->add_option("--height", gen_args.height);
  gen_cmd->add_option("--budget", gen_args.budget);
  gen_cmd->add_option("--seed", gen_args.seed);
  gen_cmd->add_flag("--hetero", gen_args.hetero, "Per-arc detection probabilities");
  gen_cmd->add_option("--alpha-min", gen_args.alpha_min);
  gen_cmd->add_option("--alpha-max", gen_args.alpha_max);
  gen_cmd->add_option("--out", gen_args.out, "Instance JSON output");
  gen_cmd->add_option("--field-out", gen_args.field_out, "Persist the field for radius sweeps");
  gen_cmd->add_option("--field-in", gen_args.field_in, "Reuse a persisted field");

  BenchConfig bench_config;
  std::string bench_mode = "budget", csv_path;
  auto* bench_cmd = app.add_subcommand("bench", "Runtime sweeps over budget or sparsity");
  bench_cmd->add_option("--mode", bench_mode)->check(CLI::IsMember({"budget", "sparsity"}));
  bench_cmd->add_option("--sensors", bench_config.sensors);
  bench_cmd->add_option("--locations", bench_config.locations);
  bench_cmd->add_option("--radius", bench_config.radius);
  bench_cmd->add_option("--reps", bench_config.reps);
  bench_cmd->add_option("--seed", bench_config.seed);
  bench_cmd->add_option("--budgets", bench_config.budgets, "Budget sweep points");
  bench_cmd->add_option("--budget", bench_config.budget, "Fixed budget for the sparsity sweep");
  bench_cmd->add_option("--radii", bench_config.radii, "Radius sweep points");
  bench_cmd->add_flag("--with-baseline", bench_config.with_baseline);
  bench_cmd->add_option("--timeout-s", bench_config.timeout_s, "Per-solve baseline timeout");
  bench_cmd->add_option("--csv", csv_path, "CSV output ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(instance_path, out_path, trace_path, self_verify);
    if (greedy_cmd->parsed()) return cmd_solve_greedy(instance_path, out_path, oracle_check);
    if (baseline_cmd->parsed()) return cmd_baseline(instance_path, out_path, oracle);
    if (verify_cmd->parsed()) return cmd_verify(instance_path, schedule_path, trace_path);
    if (gen_cmd->parsed()) {
      gen_args.radius_set = gen_cmd->count("--radius") > 0;
      return cmd_gen(gen_args);
    }
    if (bench_cmd->parsed()) return cmd_bench(bench_config, bench_mode, csv_path);
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const GenerationFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitUsage;
}
