#include "searchalloc/certificate.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace searchalloc {

Certificate build_certificate(const SolveTrace& trace, const SearchInstance& inst) {
  Certificate cert;
  cert.source_price.assign(inst.num_agents, std::numeric_limits<double>::quiet_NaN());
  cert.sink_price.assign(inst.num_locations, std::numeric_limits<double>::quiet_NaN());

  bool terminated = false;
  double last_value = 0.0;
  for (const TraceEvent& event : trace.events) {
    if (const auto* elim = std::get_if<EliminationEvent>(&event)) {
      Certificate::Group group{elim->agents, elim->locations, elim->value};
      for (int m : group.agents) {
        if (!std::isnan(cert.source_price[m]))
          throw MalformedTrace("agent " + std::to_string(m) + " eliminated twice");
        cert.source_price[m] = -elim->value;
      }
      for (int k : group.locations) {
        if (!std::isnan(cert.sink_price[k]))
          throw MalformedTrace("location " + std::to_string(k) + " eliminated twice");
        cert.sink_price[k] = -elim->value;
      }
      cert.groups.push_back(std::move(group));
    } else if (const auto* term = std::get_if<TerminationEvent>(&event)) {
      terminated = true;
      last_value = term->last_value;
    }
  }

  // Nodes never eliminated form the terminal group, priced at the last
  // value extracted from the heap before termination.
  Certificate::Group terminal;
  terminal.value = last_value;
  for (int m = 0; m < inst.num_agents; ++m)
    if (std::isnan(cert.source_price[m])) terminal.agents.push_back(m);
  for (int k = 0; k < inst.num_locations; ++k)
    if (std::isnan(cert.sink_price[k])) terminal.locations.push_back(k);
  if (!terminal.agents.empty() || !terminal.locations.empty()) {
    if (!terminated)
      throw MalformedTrace("trace has unpriced nodes but no termination event");
    for (int m : terminal.agents) cert.source_price[m] = -last_value;
    for (int k : terminal.locations) cert.sink_price[k] = -last_value;
    cert.groups.push_back(std::move(terminal));
  }
  return cert;
}

namespace {

constexpr double kTol = 1e-9;

void add_violation(Verdict& verdict, std::string message) {
  verdict.pass = false;
  verdict.violations.push_back(std::move(message));
}

std::string arc_name(const Arc& arc) {
  return "(" + std::to_string(arc.agent) + "," + std::to_string(arc.location) + ")";
}

}  // namespace

Verdict verify(const Schedule& schedule, const Certificate& cert, const SearchInstance& inst) {
  Verdict verdict;
  if (schedule.counts.size() != inst.arcs.size())
    throw ScheduleInstanceMismatch("schedule/instance arc count mismatch");

  const std::vector<int> u = schedule.location_totals(inst);
  const std::vector<int> used = schedule.agent_totals(inst);
  const int total = inst.total_budget();

  // Primal feasibility (the equality budget constraint is part of the primal).
  for (size_t a = 0; a < schedule.counts.size(); ++a)
    if (schedule.counts[a] < 0)
      add_violation(verdict, "negative allocation on arc " + arc_name(inst.arcs[a]));
  for (int m = 0; m < inst.num_agents; ++m)
    if (used[m] != inst.budgets[m])
      add_violation(verdict, "agent " + std::to_string(m) + " uses " + std::to_string(used[m]) +
                                 " of budget " + std::to_string(inst.budgets[m]));

  // Dual feasibility and the arc-side slackness conditions.
  for (size_t a = 0; a < inst.arcs.size(); ++a) {
    const Arc& arc = inst.arcs[a];
    double ds = cert.source_price[arc.agent];
    double dt = cert.sink_price[arc.location];
    if (ds > dt + kTol)
      add_violation(verdict, "dual infeasible on arc " + arc_name(arc) + ": d^s > d^t");
    if (ds < dt - kTol && schedule.counts[a] != 0)
      add_violation(verdict, "slackness: d^s < d^t but x > 0 on arc " + arc_name(arc));
    if (schedule.counts[a] > 0 && std::abs(ds - dt) > kTol)
      add_violation(verdict, "slackness: x > 0 but d^s != d^t on arc " + arc_name(arc));
  }

  // Unit-arc slackness: y_{kj} = 1 iff j <= u_k (prefix property).
  for (int k = 0; k < inst.num_locations; ++k) {
    double dt = cert.sink_price[k];
    double p = inst.priors[k] * inst.detection.alpha[k];
    for (int j = 1; j <= total; ++j) {
      bool y = j <= u[k];
      if (dt - cert.lambda < -p - kTol && y)
        add_violation(verdict, "slackness: d^t < -p_{kj} but y = 1 at location " +
                                   std::to_string(k) + ", j = " + std::to_string(j));
      if (dt - cert.lambda > -p + kTol && !y)
        add_violation(verdict, "slackness: d^t > -p_{kj} but y = 0 at location " +
                                   std::to_string(k) + ", j = " + std::to_string(j));
      p *= 1.0 - inst.detection.alpha[k];
    }
  }

  // Strong duality: negated min-form dual value vs the maximization primal.
  double dual = 0.0;
  for (int k = 0; k < inst.num_locations; ++k) {
    double p = inst.priors[k] * inst.detection.alpha[k];
    for (int j = 1; j <= total; ++j) {
      dual += std::min(0.0, cert.lambda - cert.sink_price[k] - p);
      p *= 1.0 - inst.detection.alpha[k];
    }
  }
  for (int m = 0; m < inst.num_agents; ++m)
    dual += cert.source_price[m] * inst.budgets[m];
  dual -= cert.lambda * total;

  verdict.primal_objective = objective(inst, schedule);
  verdict.dual_objective = -dual;
  double scale = std::max({1.0, std::abs(verdict.primal_objective), std::abs(verdict.dual_objective)});
  if (std::abs(verdict.primal_objective - verdict.dual_objective) > kTol * scale) {
    std::ostringstream os;
    os << "strong duality gap: primal " << verdict.primal_objective << " vs dual "
       << verdict.dual_objective;
    add_violation(verdict, os.str());
  }
  return verdict;
}

}  // namespace searchalloc
