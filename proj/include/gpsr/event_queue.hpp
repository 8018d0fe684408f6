#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "gpsr/forwarding.hpp"
#include "gpsr/neighbor.hpp"

namespace gpsr {

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Frames on the air.
struct BeaconFrame {
  BeaconImage image;
};

struct DataFrame {
  NodeId sender;
  Position sender_position;  // piggybacked, overheard by everyone in range
  NodeId next_hop;
  GpsrHeader header;
};

using Frame = std::variant<BeaconFrame, DataFrame>;

// Node references inside events are indices into the world's node vector.
struct TransmitBeacon {
  std::size_t node;
};
struct RadioDeliver {
  std::size_t receiver;
  Frame frame;
};
struct EvictCheck {
  std::size_t node;
};
struct OriginatePacket {
  std::size_t flow;
  std::uint32_t sequence;
};
struct MobilityUpdate {
  std::size_t node;
};
struct SimulationEnd {};

// Alternative order matches EventKind.
using EventPayload =
    std::variant<TransmitBeacon, RadioDeliver, EvictCheck, OriginatePacket, MobilityUpdate, SimulationEnd>;

enum class EventKind { TransmitBeacon, RadioDeliver, EvictCheck, OriginatePacket, MobilityUpdate, SimulationEnd };

struct Event {
  double time = 0.0;
  std::uint64_t sequence = 0;
  EventPayload payload;

  EventKind kind() const { return static_cast<EventKind>(payload.index()); }
};

// Future-event set ordered by (time, sequence). Equal times pop in scheduling order.
class EventQueue {
 public:
  // Time of the most recently popped event.
  double now() const { return now_; }
  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

  // Throws SimulationError if time < now().
  void schedule(double time, EventPayload payload);

  const Event& top() const;
  Event pop();

  // Pending events in unspecified order.
  std::span<const Event> pending() const { return heap_; }

 private:
  std::vector<Event> heap_;
  double now_ = 0.0;
  std::uint64_t next_sequence_ = 0;
};

}  // namespace gpsr
