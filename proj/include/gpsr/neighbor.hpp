#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gpsr/random.hpp"
#include "gpsr/types.hpp"

namespace gpsr {

// Beacon: identifier plus position, broadcast periodically by every node.
struct Beacon {
  NodeId sender;
  Position position;

  bool operator==(const Beacon&) const = default;
};

inline constexpr std::size_t kBeaconWireSize = 12;
using BeaconImage = std::array<std::uint8_t, kBeaconWireSize>;

class CodecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedBeacon : public CodecError {
 public:
  using CodecError::CodecError;
};

// Wire layout, network byte order:
//   [0..3]  sender id, unsigned
//   [4..7]  x, IEEE-754 binary32
//   [8..11] y, IEEE-754 binary32
// Throws CodecError when a coordinate does not fit in binary32.
BeaconImage encode_beacon(const Beacon& beacon);

// Throws MalformedBeacon on wrong length or non-finite coordinates.
Beacon decode_beacon(std::span<const std::uint8_t> bytes);

// Rounds a position to what survives a trip through the beacon codec.
Position wire_position(const Position& p);

struct NeighborEntry {
  NodeId id;
  Position position;
  double last_heard = 0.0;
};

// Position table of a single node.
class NeighborTable {
 public:
  NeighborTable(NodeId owner, double timeout);

  NodeId owner() const { return owner_; }
  double timeout() const { return timeout_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Insert or overwrite. Used for beacons and for positions piggybacked on
  // overheard data packets alike.
  void on_heard(NodeId id, const Position& position, double now);

  // Removes and returns (ascending) every entry with now - last_heard > timeout.
  std::vector<NodeId> evict_stale(double now);

  std::optional<NeighborEntry> find(NodeId id) const;

  // Current neighbors, ascending by id.
  std::vector<Neighbor> neighbors() const;

 private:
  NodeId owner_;
  double timeout_;
  std::map<NodeId, NeighborEntry> entries_;
};

// now + interval * U[0.75, 1.25], drawn from the node's jitter stream.
double next_beacon_time(double interval, double now, RandomStream& jitter);

}  // namespace gpsr
