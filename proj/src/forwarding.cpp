#include "gpsr/forwarding.hpp"

#include <algorithm>
#include <vector>

namespace gpsr {

namespace {

ForwardDecision forward_to(GpsrHeader header, const Neighbor& next) {
  ++header.hop_count;
  return ForwardDecision{Forward{next}, std::move(header)};
}

ForwardDecision drop(GpsrHeader header, DropReason reason) {
  return ForwardDecision{Drop{reason}, std::move(header)};
}

void clear_perimeter(GpsrHeader& header) {
  header.mode = GpsrMode::Greedy;
  header.lp.reset();
  header.lf.reset();
  header.e0.reset();
}

ForwardDecision greedy_or_perimeter(GpsrHeader header, NodeId self, const Position& self_pos,
                                    std::span<const Neighbor> neighbors,
                                    std::span<const Neighbor> planar) {
  if (auto next = greedy_next_hop(self_pos, header.dest_position, neighbors))
    return forward_to(std::move(header), *next);
  return enter_perimeter(std::move(header), self, self_pos, planar);
}

}  // namespace

bool GpsrHeader::coherent() const {
  const bool any = lp || lf || e0;
  const bool all = lp && lf && e0;
  return mode == GpsrMode::Greedy ? !any : all;
}

std::string_view to_string(GpsrMode mode) { return mode == GpsrMode::Greedy ? "GREEDY" : "PERIMETER"; }

std::string_view to_string(DropReason reason) {
  switch (reason) {
    case DropReason::NoNeighbors: return "NO_NEIGHBORS";
    case DropReason::Unreachable: return "UNREACHABLE";
    case DropReason::Ttl: return "TTL";
  }
  return "UNKNOWN";
}

std::optional<Neighbor> greedy_next_hop(const Position& self_pos, const Position& dest_pos,
                                        std::span<const Neighbor> neighbors) {
  std::optional<Neighbor> best;
  double best_distance = distance(self_pos, dest_pos);
  for (const Neighbor& n : neighbors) {
    const double d = distance(n.position, dest_pos);
    if (d < best_distance || (best && d == best_distance && n.id < best->id)) {
      best = n;
      best_distance = d;
    }
  }
  return best;
}

ForwardDecision enter_perimeter(GpsrHeader header, NodeId self, const Position& self_pos,
                                std::span<const Neighbor> planar_neighbors) {
  if (planar_neighbors.empty()) return drop(std::move(header), DropReason::NoNeighbors);

  const Neighbor next = right_hand_next(self_pos, bearing(self_pos, header.dest_position), planar_neighbors);
  header.mode = GpsrMode::Perimeter;
  header.lp = self_pos;
  header.lf = self_pos;
  header.e0 = DirectedEdge{self, next.id};

  ForwardDecision decision = forward_to(std::move(header), next);
  decision.entered_perimeter = true;
  return decision;
}

ForwardDecision perimeter_step(GpsrHeader header, NodeId self, const Position& self_pos,
                               const std::optional<Neighbor>& arrived_from,
                               std::span<const Neighbor> neighbors,
                               std::span<const Neighbor> planar_neighbors) {
  const Position dest = header.dest_position;

  if (distance(self_pos, dest) < distance(*header.lp, dest)) {
    clear_perimeter(header);
    ForwardDecision decision = greedy_or_perimeter(std::move(header), self, self_pos, neighbors, planar_neighbors);
    decision.exited_perimeter = true;
    return decision;
  }

  if (planar_neighbors.empty()) return drop(std::move(header), DropReason::NoNeighbors);

  // Sweep reference: our own record of the previous hop when it is a planar
  // neighbor, so the back edge sits exactly on the reference bearing.
  double reference = bearing(self_pos, dest);
  if (arrived_from) {
    auto known = std::find_if(planar_neighbors.begin(), planar_neighbors.end(),
                              [&](const Neighbor& n) { return n.id == arrived_from->id; });
    reference = bearing(self_pos, known != planar_neighbors.end() ? known->position : arrived_from->position);
  }
  Neighbor candidate = right_hand_next(self_pos, reference, planar_neighbors);

  // Face change. The crossing is tested against the fixed segment lp -> dest;
  // only crossings strictly closer to dest than lf count, which is the same set
  // as crossings of lf -> dest.
  bool new_face_edge = false;
  if (*header.lp != dest) {
    const Segment entry_line(*header.lp, dest);
    for (std::size_t turns = 0; turns < planar_neighbors.size(); ++turns) {
      const auto crossing = segments_cross(Segment(self_pos, candidate.position), entry_line);
      if (!crossing || !(distance(*crossing, dest) < distance(*header.lf, dest))) break;
      header.lf = *crossing;
      candidate = right_hand_next(self_pos, candidate.position, planar_neighbors);
      header.e0 = DirectedEdge{self, candidate.id};
      new_face_edge = true;
    }
  }

  if (!new_face_edge && header.e0 == DirectedEdge{self, candidate.id})
    return drop(std::move(header), DropReason::Unreachable);

  return forward_to(std::move(header), candidate);
}

ForwardDecision handle_packet(const NodeView& node, const GpsrHeader& header,
                              const std::optional<Neighbor>& arrived_from) {
  if (node.self == header.destination) return ForwardDecision{Deliver{}, header};
  if (header.hop_count >= node.ttl) return drop(header, DropReason::Ttl);
  if (node.neighbors.empty()) return drop(header, DropReason::NoNeighbors);

  if (header.mode == GpsrMode::Greedy) {
    if (auto next = greedy_next_hop(node.position, header.dest_position, node.neighbors))
      return forward_to(header, *next);
    const auto planar = planarize(node.position, node.neighbors, node.planarization);
    return enter_perimeter(header, node.self, node.position, planar);
  }

  const auto planar = planarize(node.position, node.neighbors, node.planarization);
  return perimeter_step(header, node.self, node.position, arrived_from, node.neighbors, planar);
}

}  // namespace gpsr
