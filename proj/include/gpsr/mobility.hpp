#pragma once

#include <vector>

#include "gpsr/types.hpp"

namespace gpsr {

struct Waypoint {
  double time = 0.0;
  Position position;

  bool operator==(const Waypoint&) const = default;
};

// Scripted path. `initial` acts as an implicit waypoint at t=0 unless the first
// waypoint is itself at t=0. Linear between waypoints, holds the last one
// afterwards. Waypoint times strictly increase.
struct MobilityPlan {
  Position initial;
  std::vector<Waypoint> waypoints;

  bool is_static() const { return waypoints.empty(); }
};

Position position_at(const MobilityPlan& plan, double t);

}  // namespace gpsr
