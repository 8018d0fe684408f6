#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include "gpsr/geometry.hpp"
#include "gpsr/types.hpp"

namespace gpsr {

enum class GpsrMode { Greedy, Perimeter };

struct DirectedEdge {
  NodeId from;
  NodeId to;

  bool operator==(const DirectedEdge&) const = default;
};

// Per-packet routing state. In Greedy mode the perimeter fields are empty; in
// Perimeter mode all three are set:
//   lp  where the packet entered perimeter mode
//   lf  where it entered the face it is currently walking
//   e0  first edge it took on that face
struct GpsrHeader {
  std::uint64_t packet_id = 0;
  NodeId source;
  NodeId destination;
  Position dest_position;
  GpsrMode mode = GpsrMode::Greedy;
  std::optional<Position> lp;
  std::optional<Position> lf;
  std::optional<DirectedEdge> e0;
  std::uint32_t hop_count = 0;

  bool coherent() const;
  bool operator==(const GpsrHeader&) const = default;
};

enum class DropReason { NoNeighbors, Unreachable, Ttl };

std::string_view to_string(GpsrMode mode);
std::string_view to_string(DropReason reason);

struct Deliver {};
struct Forward {
  Neighbor next;
};
struct Drop {
  DropReason reason;
};

struct ForwardDecision {
  std::variant<Deliver, Forward, Drop> action;
  GpsrHeader header;  // as it leaves this node
  bool exited_perimeter = false;
  bool entered_perimeter = false;

  bool is_deliver() const { return std::holds_alternative<Deliver>(action); }
  const Forward* forward() const { return std::get_if<Forward>(&action); }
  const Drop* drop() const { return std::get_if<Drop>(&action); }
};

inline constexpr std::uint32_t kDefaultTtl = 128;

// What a node knows when it handles a packet.
struct NodeView {
  NodeId self;
  Position position;
  std::span<const Neighbor> neighbors;
  Planarization planarization = Planarization::GG;
  std::uint32_t ttl = kDefaultTtl;
};

// Neighbor strictly closer to the destination than self, minimizing that distance
// (ties: smaller id). nullopt at a local maximum.
std::optional<Neighbor> greedy_next_hop(const Position& self_pos, const Position& dest_pos,
                                        std::span<const Neighbor> neighbors);

// Switches the header to perimeter mode at this node and picks the first edge
// counterclockwise from the bearing toward the destination.
ForwardDecision enter_perimeter(GpsrHeader header, NodeId self, const Position& self_pos,
                                std::span<const Neighbor> planar_neighbors);

// One perimeter-mode hop: recovery to greedy, right-hand rule, face change and
// face-loop detection. `neighbors` is the full table (used for recovery).
ForwardDecision perimeter_step(GpsrHeader header, NodeId self, const Position& self_pos,
                               const std::optional<Neighbor>& arrived_from,
                               std::span<const Neighbor> neighbors,
                               std::span<const Neighbor> planar_neighbors);

// Full per-hop decision; `arrived_from` is empty at the originating node.
ForwardDecision handle_packet(const NodeView& node, const GpsrHeader& header,
                              const std::optional<Neighbor>& arrived_from);

}  // namespace gpsr
