#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace gpsr {

struct NodeId {
  std::uint32_t value = 0;

  auto operator<=>(const NodeId&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, NodeId id) { return os << id.value; }

// Planar coordinate in meters.
struct Position {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Position&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Position& p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

// A node as seen by another node: identifier plus last known location.
struct Neighbor {
  NodeId id;
  Position position;

  bool operator==(const Neighbor&) const = default;
};

}  // namespace gpsr

template <>
struct std::hash<gpsr::NodeId> {
  std::size_t operator()(gpsr::NodeId id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};
