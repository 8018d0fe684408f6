#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gpsr/event_queue.hpp"
#include "gpsr/mobility.hpp"
#include "gpsr/neighbor.hpp"
#include "gpsr/random.hpp"
#include "gpsr/scenario.hpp"
#include "gpsr/trace.hpp"

namespace gpsr {

struct SimStats {
  std::uint64_t originated = 0;
  std::uint64_t delivered = 0;
  std::uint64_t dropped_unreachable = 0;
  std::uint64_t dropped_no_neighbors = 0;
  std::uint64_t dropped_ttl = 0;
  std::uint64_t dropped_link = 0;  // next hop out of range or lost on the air
  std::uint64_t in_flight = 0;     // data frames still queued for their next hop
  std::vector<std::uint32_t> hop_counts;
  std::uint64_t greedy_hops = 0;
  std::uint64_t perimeter_hops = 0;
  std::uint64_t perimeter_entries = 0;
  std::uint64_t perimeter_exits = 0;
  std::uint64_t beacons_sent = 0;

  std::uint64_t dropped() const { return dropped_unreachable + dropped_no_neighbors + dropped_ttl + dropped_link; }
  bool operator==(const SimStats&) const = default;
};

// One simulated network. Single-threaded; distinct worlds share nothing.
class World {
 public:
  explicit World(ScenarioConfig config, TraceSink* trace = nullptr);

  // Runs to the scenario duration.
  SimStats run();
  // Processes events with time <= until, stopping early at SimulationEnd.
  SimStats run(double until);

  double now() const { return queue_.now(); }
  const ScenarioConfig& config() const { return config_; }
  const SimStats& stats() const { return stats_; }
  const NeighborTable& table(NodeId id) const;
  Position position_of(NodeId id, double t) const;

  // Puts a frame on the air from `sender` at the current time; returns the
  // number of RadioDeliver events scheduled.
  std::size_t transmit(NodeId sender, const Frame& frame);

  EventQueue& queue() { return queue_; }

 private:
  struct SimNode {
    NodeId id;
    MobilityPlan plan;
    Position position;
    NeighborTable table;
    RandomStream jitter;
    RandomStream loss;
  };

  std::size_t index_of(NodeId id) const;
  void seed_events();
  void dispatch(Event& event);
  Position refresh_position(SimNode& node);
  // Position the node advertises and routes with: what its beacons carry.
  Position advertised_position(SimNode& node);

  void on_transmit_beacon(std::size_t i);
  void on_radio_deliver(RadioDeliver& delivery);
  void on_evict_check(std::size_t i);
  void on_originate(const OriginatePacket& origin);
  void on_mobility_update(std::size_t i);
  void process_packet(std::size_t i, const GpsrHeader& header, const std::optional<Neighbor>& arrived_from);
  std::vector<std::size_t> transmit_from(std::size_t i, const Frame& frame);

  void trace(TraceRecord record);
  std::uint64_t count_in_flight() const;

  ScenarioConfig config_;
  TraceSink* trace_;
  EventQueue queue_;
  std::vector<SimNode> nodes_;
  std::unordered_map<NodeId, std::size_t> index_;
  SimStats stats_;
  std::uint64_t next_packet_id_ = 0;
  bool ended_ = false;
};

}  // namespace gpsr
