#include "searchalloc/json_io.hpp"

#include <fstream>
#include <map>

namespace searchalloc {

using nlohmann::json;

namespace {

constexpr const char* kInstanceFormat = "search-alloc/1";
constexpr const char* kFieldFormat = "search-alloc-field/1";

std::map<int, int> index_of_ids(const std::vector<int>& ids, const char* what) {
  std::map<int, int> index;
  for (size_t i = 0; i < ids.size(); ++i)
    if (!index.insert({ids[i], (int)i}).second)
      throw FormatError(std::string("duplicate ") + what + " id " + std::to_string(ids[i]));
  return index;
}

}  // namespace

json instance_to_json(const SearchInstance& inst) {
  json j;
  j["format"] = kInstanceFormat;
  j["agents"] = json::array();
  for (int m = 0; m < inst.num_agents; ++m)
    j["agents"].push_back({{"id", inst.agent_id(m)}, {"budget", inst.budgets[m]}});
  j["locations"] = json::array();
  for (int k = 0; k < inst.num_locations; ++k) {
    json loc = {{"id", inst.location_id(k)}, {"prior", inst.priors[k]}};
    if (inst.homogeneous()) loc["alpha"] = inst.detection.alpha[k];
    j["locations"].push_back(std::move(loc));
  }
  j["arcs"] = json::array();
  for (size_t a = 0; a < inst.arcs.size(); ++a) {
    json arc = {{"agent", inst.agent_id(inst.arcs[a].agent)},
                {"location", inst.location_id(inst.arcs[a].location)}};
    if (!inst.homogeneous()) arc["alpha"] = inst.detection.alpha[a];
    j["arcs"].push_back(std::move(arc));
  }
  return j;
}

SearchInstance instance_from_json(const json& j) {
  if (!j.is_object() || j.value("format", "") != kInstanceFormat)
    throw FormatError("expected a \"" + std::string(kInstanceFormat) + "\" instance document");

  SearchInstance inst;
  for (const json& agent : j.at("agents")) {
    inst.agent_ids.push_back(agent.at("id").get<int>());
    inst.budgets.push_back(agent.at("budget").get<int>());
  }
  inst.num_agents = (int)inst.agent_ids.size();

  bool any_location_alpha = false, all_location_alpha = true;
  for (const json& loc : j.at("locations")) {
    inst.location_ids.push_back(loc.at("id").get<int>());
    inst.priors.push_back(loc.at("prior").get<double>());
    if (loc.contains("alpha"))
      any_location_alpha = true;
    else
      all_location_alpha = false;
  }
  inst.num_locations = (int)inst.location_ids.size();

  auto agent_index = index_of_ids(inst.agent_ids, "agent");
  auto location_index = index_of_ids(inst.location_ids, "location");

  bool any_arc_alpha = false, all_arc_alpha = true;
  std::vector<double> arc_alpha;
  for (const json& arc : j.at("arcs")) {
    auto am = agent_index.find(arc.at("agent").get<int>());
    auto lk = location_index.find(arc.at("location").get<int>());
    if (am == agent_index.end() || lk == location_index.end())
      throw FormatError("arc references an unknown agent or location id");
    inst.arcs.push_back({am->second, lk->second});
    if (arc.contains("alpha")) {
      any_arc_alpha = true;
      arc_alpha.push_back(arc.at("alpha").get<double>());
    } else {
      all_arc_alpha = false;
    }
  }

  if (any_location_alpha && any_arc_alpha)
    throw FormatError("instance mixes per-location and per-arc alpha");
  if (any_arc_alpha) {
    if (!all_arc_alpha) throw FormatError("heterogeneous instance is missing alpha on some arcs");
    inst.detection.kind = DetectionKind::Heterogeneous;
    inst.detection.alpha = std::move(arc_alpha);
  } else {
    if (!any_location_alpha || !all_location_alpha)
      throw FormatError("homogeneous instance needs alpha on every location");
    inst.detection.kind = DetectionKind::Homogeneous;
    for (const json& loc : j.at("locations"))
      inst.detection.alpha.push_back(loc.at("alpha").get<double>());
  }
  return inst;
}

json schedule_to_json(const SearchInstance& inst, const Schedule& schedule) {
  if (schedule.counts.size() != inst.arcs.size())
    throw ScheduleInstanceMismatch("schedule/instance arc count mismatch");
  json j;
  j["objective"] = objective(inst, schedule);
  j["allocation"] = json::array();
  for (size_t a = 0; a < schedule.counts.size(); ++a)
    if (schedule.counts[a] > 0)
      j["allocation"].push_back({{"agent", inst.agent_id(inst.arcs[a].agent)},
                                 {"location", inst.location_id(inst.arcs[a].location)},
                                 {"count", schedule.counts[a]}});
  return j;
}

Schedule schedule_from_json(const json& j, const SearchInstance& inst) {
  std::map<std::pair<int, int>, int> arc_index;
  for (size_t a = 0; a < inst.arcs.size(); ++a)
    arc_index[{inst.agent_id(inst.arcs[a].agent), inst.location_id(inst.arcs[a].location)}] = (int)a;

  Schedule schedule;
  schedule.counts.assign(inst.arcs.size(), 0);
  for (const json& entry : j.at("allocation")) {
    auto it = arc_index.find({entry.at("agent").get<int>(), entry.at("location").get<int>()});
    if (it == arc_index.end())
      throw FormatError("allocation entry does not match any accessibility arc");
    schedule.counts[it->second] = entry.at("count").get<int>();
  }
  return schedule;
}

json trace_to_json(const SolveTrace& trace, const SearchInstance& inst) {
  json events = json::array();
  for (const TraceEvent& event : trace.events) {
    if (const auto* ex = std::get_if<ExtractionEvent>(&event)) {
      events.push_back({{"type", "extraction"},
                        {"location", inst.location_id(ex->location)},
                        {"j", ex->index},
                        {"value", ex->value},
                        {"skipped", ex->skipped}});
    } else if (const auto* as = std::get_if<AssignmentEvent>(&event)) {
      json path = json::array();
      for (const NodeRef& n : as->path)
        path.push_back({{"kind", n.kind == NodeKind::Source ? "source" : "sink"},
                        {"id", n.kind == NodeKind::Source ? inst.agent_id(n.index)
                                                          : inst.location_id(n.index)}});
      events.push_back(
          {{"type", "assignment"}, {"path", std::move(path)}, {"agent", inst.agent_id(as->agent)}});
    } else if (const auto* el = std::get_if<EliminationEvent>(&event)) {
      json agents = json::array(), locations = json::array();
      for (int m : el->agents) agents.push_back(inst.agent_id(m));
      for (int k : el->locations) locations.push_back(inst.location_id(k));
      events.push_back({{"type", "elimination"},
                        {"agents", std::move(agents)},
                        {"locations", std::move(locations)},
                        {"value", el->value}});
    } else if (const auto* term = std::get_if<TerminationEvent>(&event)) {
      events.push_back({{"type", "termination"}, {"value", term->last_value}});
    }
  }
  return json{{"events", std::move(events)}};
}

SolveTrace trace_from_json(const json& j, const SearchInstance& inst) {
  std::vector<int> agent_ids, location_ids;
  for (int m = 0; m < inst.num_agents; ++m) agent_ids.push_back(inst.agent_id(m));
  for (int k = 0; k < inst.num_locations; ++k) location_ids.push_back(inst.location_id(k));
  auto agent_index = index_of_ids(agent_ids, "agent");
  auto location_index = index_of_ids(location_ids, "location");

  SolveTrace trace;
  for (const json& event : j.at("events")) {
    std::string type = event.at("type").get<std::string>();
    if (type == "extraction") {
      trace.events.push_back(ExtractionEvent{location_index.at(event.at("location").get<int>()),
                                             event.at("j").get<int>(),
                                             event.at("value").get<double>(),
                                             event.value("skipped", false)});
    } else if (type == "assignment") {
      AssignmentEvent as;
      as.agent = agent_index.at(event.at("agent").get<int>());
      for (const json& n : event.at("path")) {
        bool source = n.at("kind").get<std::string>() == "source";
        int idx = source ? agent_index.at(n.at("id").get<int>())
                         : location_index.at(n.at("id").get<int>());
        as.path.push_back({source ? NodeKind::Source : NodeKind::Sink, idx});
      }
      trace.events.push_back(std::move(as));
    } else if (type == "elimination") {
      EliminationEvent el;
      el.value = event.at("value").get<double>();
      for (const json& id : event.at("agents")) el.agents.push_back(agent_index.at(id.get<int>()));
      for (const json& id : event.at("locations"))
        el.locations.push_back(location_index.at(id.get<int>()));
      trace.events.push_back(std::move(el));
    } else if (type == "termination") {
      trace.events.push_back(TerminationEvent{event.at("value").get<double>()});
    } else {
      throw FormatError("unknown trace event type: " + type);
    }
  }
  return trace;
}

json verdict_to_json(const Verdict& verdict) {
  return json{{"pass", verdict.pass},
              {"violations", verdict.violations},
              {"primal_objective", verdict.primal_objective},
              {"dual_objective", verdict.dual_objective}};
}

json field_to_json(const SpatialField& field) {
  json j;
  j["format"] = kFieldFormat;
  j["width"] = field.width;
  j["height"] = field.height;
  j["radius"] = field.radius;
  j["seed"] = field.seed;
  j["sensors"] = json::array();
  for (const auto& s : field.sensors) j["sensors"].push_back({s[0], s[1]});
  j["locations"] = json::array();
  for (const auto& l : field.locations) j["locations"].push_back({l[0], l[1]});
  return j;
}

SpatialField field_from_json(const json& j) {
  if (!j.is_object() || j.value("format", "") != kFieldFormat)
    throw FormatError("expected a \"" + std::string(kFieldFormat) + "\" field document");
  SpatialField field;
  field.width = j.at("width").get<double>();
  field.height = j.at("height").get<double>();
  field.radius = j.at("radius").get<double>();
  field.seed = j.value("seed", 0);
  for (const json& s : j.at("sensors"))
    field.sensors.push_back({s.at(0).get<double>(), s.at(1).get<double>()});
  for (const json& l : j.at("locations"))
    field.locations.push_back({l.at(0).get<double>(), l.at(1).get<double>()});
  return field;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace searchalloc
