#include "gpsr/mobility.hpp"

#include <algorithm>

namespace gpsr {

Position position_at(const MobilityPlan& plan, double t) {
  const auto& wps = plan.waypoints;
  if (wps.empty()) return plan.initial;

  Waypoint from{0.0, plan.initial};
  if (t <= wps.front().time) {
    if (wps.front().time <= 0.0) return wps.front().position;
    const Waypoint& to = wps.front();
    const double s = std::max(t, 0.0) / to.time;
    return Position{from.position.x + s * (to.position.x - from.position.x),
                    from.position.y + s * (to.position.y - from.position.y)};
  }
  if (t >= wps.back().time) return wps.back().position;

  auto next = std::upper_bound(wps.begin(), wps.end(), t,
                               [](double value, const Waypoint& w) { return value < w.time; });
  const Waypoint& a = *(next - 1);
  const Waypoint& b = *next;
  const double s = (t - a.time) / (b.time - a.time);
  return Position{a.position.x + s * (b.position.x - a.position.x),
                  a.position.y + s * (b.position.y - a.position.y)};
}

}  // namespace gpsr
