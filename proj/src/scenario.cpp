#include "searchalloc/scenario.hpp"

#include <cmath>
#include <random>

namespace searchalloc {
namespace {

double uniform53(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

double sq_dist(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  double dx = a[0] - b[0], dy = a[1] - b[1];
  return dx * dx + dy * dy;
}

constexpr int kMaxAttemptsPerPoint = 100'000;
constexpr int kMaxRounds = 1000;

}  // namespace

SpatialField generate_field(int num_sensors, int num_locations, double radius, double width,
                            double height, uint64_t seed) {
  if (num_sensors <= 0 || num_locations <= 0 || radius <= 0.0 || width <= 0.0 || height <= 0.0)
    throw std::invalid_argument("field parameters must be positive");

  SpatialField field;
  field.width = width;
  field.height = height;
  field.radius = radius;
  field.seed = seed;

  std::mt19937_64 rng(seed);
  auto draw = [&]() -> std::array<double, 2> {
    double x = uniform53(rng) * width;
    double y = uniform53(rng) * height;
    return {x, y};
  };

  field.sensors.resize(num_sensors);
  field.locations.resize(num_locations);
  for (auto& s : field.sensors) s = draw();
  for (auto& l : field.locations) l = draw();

  const double r2 = radius * radius;
  auto location_covered = [&](const std::array<double, 2>& loc) {
    for (const auto& s : field.sensors)
      if (sq_dist(s, loc) <= r2) return true;
    return false;
  };
  auto sensor_useful = [&](const std::array<double, 2>& sensor) {
    for (const auto& l : field.locations)
      if (sq_dist(sensor, l) <= r2) return true;
    return false;
  };
  auto resample = [&](std::array<double, 2>& point, auto&& predicate) {
    for (int attempt = 0; attempt < kMaxAttemptsPerPoint; ++attempt) {
      point = draw();
      if (predicate(point)) return;
    }
    throw GenerationFailed("coverage unachievable: radius too small for the point density");
  };

  // Moving a sensor can uncover a location, so alternate fixing both sides
  // until a fixed point is reached.
  for (int round = 0; round < kMaxRounds; ++round) {
    bool changed = false;
    for (auto& loc : field.locations)
      if (!location_covered(loc)) {
        resample(loc, location_covered);
        changed = true;
      }
    for (auto& sensor : field.sensors)
      if (!sensor_useful(sensor)) {
        resample(sensor, sensor_useful);
        changed = true;
      }
    if (!changed) return field;
  }
  throw GenerationFailed("coverage repair did not converge");
}

SearchInstance compile_instance(const SpatialField& field, const CompileOptions& opts) {
  if (opts.budget_each < 1) throw std::invalid_argument("budget_each must be >= 1");

  SearchInstance inst;
  inst.num_agents = (int)field.sensors.size();
  inst.num_locations = (int)field.locations.size();
  inst.budgets.assign(inst.num_agents, opts.budget_each);

  const double r2 = field.radius * field.radius;
  for (int m = 0; m < inst.num_agents; ++m)
    for (int k = 0; k < inst.num_locations; ++k)
      if (sq_dist(field.sensors[m], field.locations[k]) <= r2) inst.arcs.push_back({m, k});

  std::mt19937_64 rng(opts.seed);
  inst.priors.resize(inst.num_locations);
  double sum = 0.0;
  for (double& p : inst.priors) {
    p = uniform53(rng);
    sum += p;
  }
  for (double& p : inst.priors) p /= sum;

  auto draw_alpha = [&]() {
    return opts.alpha_min + uniform53(rng) * (opts.alpha_max - opts.alpha_min);
  };
  if (opts.heterogeneous) {
    inst.detection.kind = DetectionKind::Heterogeneous;
    inst.detection.alpha.resize(inst.arcs.size());
  } else {
    inst.detection.kind = DetectionKind::Homogeneous;
    inst.detection.alpha.resize(inst.num_locations);
  }
  for (double& a : inst.detection.alpha) a = draw_alpha();
  return inst;
}

}  // namespace searchalloc
