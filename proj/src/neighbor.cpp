#include "gpsr/neighbor.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace gpsr {

namespace {

void put_u32(std::uint8_t* out, std::uint32_t v) {
  out[0] = static_cast<std::uint8_t>(v >> 24);
  out[1] = static_cast<std::uint8_t>(v >> 16);
  out[2] = static_cast<std::uint8_t>(v >> 8);
  out[3] = static_cast<std::uint8_t>(v);
}

std::uint32_t get_u32(const std::uint8_t* in) {
  return (std::uint32_t{in[0]} << 24) | (std::uint32_t{in[1]} << 16) | (std::uint32_t{in[2]} << 8) |
         std::uint32_t{in[3]};
}

float to_binary32(double v) {
  if (!std::isfinite(v) || std::fabs(v) > std::numeric_limits<float>::max())
    throw CodecError("coordinate " + std::to_string(v) + " not representable as binary32");
  return static_cast<float>(v);
}

}  // namespace

BeaconImage encode_beacon(const Beacon& beacon) {
  BeaconImage image{};
  put_u32(image.data(), beacon.sender.value);
  put_u32(image.data() + 4, std::bit_cast<std::uint32_t>(to_binary32(beacon.position.x)));
  put_u32(image.data() + 8, std::bit_cast<std::uint32_t>(to_binary32(beacon.position.y)));
  return image;
}

Beacon decode_beacon(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kBeaconWireSize)
    throw MalformedBeacon("beacon must be 12 bytes, got " + std::to_string(bytes.size()));
  const float x = std::bit_cast<float>(get_u32(bytes.data() + 4));
  const float y = std::bit_cast<float>(get_u32(bytes.data() + 8));
  if (!std::isfinite(x) || !std::isfinite(y)) throw MalformedBeacon("beacon coordinate is not finite");
  return Beacon{NodeId{get_u32(bytes.data())}, Position{x, y}};
}

Position wire_position(const Position& p) {
  return Position{static_cast<double>(to_binary32(p.x)), static_cast<double>(to_binary32(p.y))};
}

NeighborTable::NeighborTable(NodeId owner, double timeout) : owner_(owner), timeout_(timeout) {}

void NeighborTable::on_heard(NodeId id, const Position& position, double now) {
  if (id == owner_) throw std::invalid_argument("node cannot record itself as a neighbor");
  entries_[id] = NeighborEntry{id, position, now};
}

std::vector<NodeId> NeighborTable::evict_stale(double now) {
  std::vector<NodeId> evicted;
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (now - it->second.last_heard > timeout_) {
      evicted.push_back(it->first);
      it = entries_.erase(it);
    } else {
      ++it;
    }
  }
  return evicted;
}

std::optional<NeighborEntry> NeighborTable::find(NodeId id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<Neighbor> NeighborTable::neighbors() const {
  std::vector<Neighbor> out;
  out.reserve(entries_.size());
  for (const auto& [id, entry] : entries_) out.push_back({id, entry.position});
  return out;
}

double next_beacon_time(double interval, double now, RandomStream& jitter) {
  if (!(interval > 0.0)) throw std::invalid_argument("beacon interval must be positive");
  return now + jitter.uniform(0.75 * interval, 1.25 * interval);
}

}  // namespace gpsr
