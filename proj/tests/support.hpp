#pragma once

// Test-only helpers: random node placement, a hop-by-hop router over a static
// unit-disk topology (no event loop), and brute-force geometric references that
// avoid the formulas used in src/.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gpsr/forwarding.hpp"
#include "gpsr/geometry.hpp"
#include "gpsr/graph_kernels.hpp"
#include "gpsr/oracles.hpp"
#include "gpsr/random.hpp"
#include "gpsr/scenario.hpp"

namespace gpsr::testing {

inline std::vector<Position> random_positions(RandomStream& rng, std::size_t n, double width, double height) {
  std::vector<Position> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back({rng.uniform(0.0, width), rng.uniform(0.0, height)});
  return out;
}

inline std::vector<Neighbor> disk_neighbors(std::span<const Position> nodes, double range, std::uint32_t self) {
  std::vector<Neighbor> out;
  for (std::uint32_t j = 0; j < nodes.size(); ++j)
    if (j != self && distance(nodes[self], nodes[j]) <= range) out.push_back({NodeId{j}, nodes[j]});
  return out;
}

struct StaticRoute {
  std::vector<std::uint32_t> path;        // nodes that handled the packet, in order
  std::vector<GpsrHeader> headers;        // outgoing header at each forwarding node
  std::optional<DropReason> drop;
  bool delivered = false;
  std::uint32_t hop_count = 0;
  int entries = 0;
  int exits = 0;
};

// Node i has id i and knows exactly its unit-disk neighbors.
inline StaticRoute route_static(std::span<const Position> nodes, double range, Planarization method,
                                std::uint32_t src, std::uint32_t dst, std::uint32_t ttl = kDefaultTtl) {
  StaticRoute route;
  GpsrHeader header;
  header.source = NodeId{src};
  header.destination = NodeId{dst};
  header.dest_position = nodes[dst];

  std::uint32_t at = src;
  std::optional<Neighbor> from;
  for (std::size_t guard = 0; guard < 4 * static_cast<std::size_t>(ttl) + 8; ++guard) {
    route.path.push_back(at);
    const auto neighbors = disk_neighbors(nodes, range, at);
    const NodeView view{NodeId{at}, nodes[at], neighbors, method, ttl};
    const ForwardDecision d = handle_packet(view, header, from);
    route.entries += d.entered_perimeter;
    route.exits += d.exited_perimeter;
    route.hop_count = d.header.hop_count;
    if (d.is_deliver()) {
      route.delivered = true;
      return route;
    }
    if (const Drop* dr = d.drop()) {
      route.drop = dr->reason;
      return route;
    }
    route.headers.push_back(d.header);
    from = Neighbor{NodeId{at}, nodes[at]};
    at = d.forward()->next.id.value;
    header = d.header;
  }
  return route;  // neither delivered nor dropped: runaway
}

// RNG reference: the edge dies when some witness lies strictly inside the lune.
inline bool rng_reference(const Position& u, const Position& v, std::span<const Position> witnesses) {
  const double duv = distance_sq(u, v);
  for (const Position& w : witnesses)
    if (distance_sq(u, w) < duv && distance_sq(v, w) < duv) return false;
  return true;
}

// GG reference via Thales: w is in the closed diametral disk iff angle u-w-v >= 90 degrees.
inline bool gg_reference(const Position& u, const Position& v, std::span<const Position> witnesses) {
  for (const Position& w : witnesses) {
    const double dot = (u.x - w.x) * (v.x - w.x) + (u.y - w.y) * (v.y - w.y);
    if (dot <= 0.0) return false;
  }
  return true;
}

// Parametric crossing in long double; both parameters strictly inside (0, 1).
inline std::optional<Position> crossing_reference(const Position& a, const Position& b, const Position& c,
                                                  const Position& d) {
  using ld = long double;
  const ld rx = ld(b.x) - a.x, ry = ld(b.y) - a.y, sx = ld(d.x) - c.x, sy = ld(d.y) - c.y;
  const ld denom = rx * sy - ry * sx;
  if (denom == 0) return std::nullopt;
  const ld qx = ld(c.x) - a.x, qy = ld(c.y) - a.y;
  const ld t = (qx * sy - qy * sx) / denom;
  const ld s = (qx * ry - qy * rx) / denom;
  if (!(t > 0 && t < 1 && s > 0 && s < 1)) return std::nullopt;
  return Position{static_cast<double>(a.x + t * rx), static_cast<double>(a.y + t * ry)};
}

// Counterclockwise order from a reference direction using half-planes and cross
// products only (no atan2). Returns the first neighbor strictly after the
// reference, wrapping to those exactly on it.
inline Neighbor ccw_reference(const Position& self, double ref_x, double ref_y, std::span<const Neighbor> ns) {
  auto half = [&](double x, double y) {
    const double c = ref_x * y - ref_y * x;
    const double dot = ref_x * x + ref_y * y;
    if (c == 0 && dot > 0) return 2;  // on the reference ray: last
    return c > 0 || (c == 0 && dot < 0) ? 0 : 1;
  };
  auto before = [&](const Neighbor& a, const Neighbor& b) {
    const double ax = a.position.x - self.x, ay = a.position.y - self.y;
    const double bx = b.position.x - self.x, by = b.position.y - self.y;
    const int ha = half(ax, ay), hb = half(bx, by);
    if (ha != hb) return ha < hb;
    const double c = ax * by - ay * bx;
    if (c != 0) return c > 0;
    const double da = ax * ax + ay * ay, db = bx * bx + by * by;
    if (da != db) return da < db;
    return a.id < b.id;
  };
  return *std::min_element(ns.begin(), ns.end(), before);
}

// Random connected placement: resample until the unit-disk graph is connected.
inline std::vector<Position> connected_positions(RandomStream& rng, std::size_t n, double side, double range) {
  for (;;) {
    auto nodes = random_positions(rng, n, side, side);
    if (is_connected(nodes.size(), unit_disk_edges(nodes, range))) return nodes;
  }
}

inline ScenarioConfig static_config(std::span<const Position> nodes, double range) {
  ScenarioConfig c;
  c.radio_range = range;
  for (std::uint32_t i = 0; i < nodes.size(); ++i) c.nodes.push_back({NodeId{i}, nodes[i]});
  return c;
}

}  // namespace gpsr::testing
