#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "searchalloc/model.hpp"

namespace searchalloc {

// Random 2-D field of stationary sensors with a circular sensing range and
// potential object locations. Every location is covered by some sensor and
// every sensor covers some location.
struct SpatialField {
  double width = 100.0;
  double height = 100.0;
  double radius = 15.0;
  uint64_t seed = 0;
  std::vector<std::array<double, 2>> sensors;
  std::vector<std::array<double, 2>> locations;
};

struct GenerationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Uniform positions with rejection resampling of points that violate the
// coverage invariants, capped at 1e5 attempts per point. Deterministic per
// seed; randomness comes from mt19937_64 with 53-bit uniform draws.
SpatialField generate_field(int num_sensors, int num_locations, double radius, double width,
                            double height, uint64_t seed);

struct CompileOptions {
  int budget_each = 1;
  bool heterogeneous = false;
  double alpha_min = 0.1;
  double alpha_max = 0.9;
  uint64_t seed = 0;
};

// Accessibility arcs from the radius threshold; priors drawn uniformly and
// normalized to sum 1; detection probabilities uniform on [alpha_min, alpha_max].
SearchInstance compile_instance(const SpatialField& field, const CompileOptions& opts);

}  // namespace searchalloc
