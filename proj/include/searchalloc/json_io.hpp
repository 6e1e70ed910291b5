#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "searchalloc/certificate.hpp"
#include "searchalloc/flowsolver.hpp"
#include "searchalloc/model.hpp"
#include "searchalloc/scenario.hpp"

namespace searchalloc {

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical instance format "search-alloc/1". Agent/location ids are
// arbitrary integers; internally they map to 0-based indices in list order.
// Homogeneous instances carry per-location alpha, heterogeneous per-arc
// alpha; exactly one style must be present.
nlohmann::json instance_to_json(const SearchInstance& inst);
SearchInstance instance_from_json(const nlohmann::json& j);

// Schedule format: {objective, allocation: [{agent, location, count}]},
// with positive counts only.
nlohmann::json schedule_to_json(const SearchInstance& inst, const Schedule& schedule);
Schedule schedule_from_json(const nlohmann::json& j, const SearchInstance& inst);

nlohmann::json trace_to_json(const SolveTrace& trace, const SearchInstance& inst);
SolveTrace trace_from_json(const nlohmann::json& j, const SearchInstance& inst);

nlohmann::json verdict_to_json(const Verdict& verdict);

nlohmann::json field_to_json(const SpatialField& field);
SpatialField field_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace searchalloc
