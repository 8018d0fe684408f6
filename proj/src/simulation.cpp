#include "gpsr/simulation.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

namespace gpsr {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

World::World(ScenarioConfig config, TraceSink* trace) : config_(std::move(config)), trace_(trace) {
  validate_scenario(config_);

  std::vector<NodeSpec> specs = config_.nodes;
  std::sort(specs.begin(), specs.end(), [](const NodeSpec& a, const NodeSpec& b) { return a.id < b.id; });
  nodes_.reserve(specs.size());
  for (const NodeSpec& spec : specs) {
    MobilityPlan plan = config_.plan_for(spec);
    const Position start = position_at(plan, 0.0);
    index_.emplace(spec.id, nodes_.size());
    nodes_.push_back(SimNode{spec.id, std::move(plan), start, NeighborTable(spec.id, config_.neighbor_timeout),
                             RandomStream(config_.seed, spec.id, StreamPurpose::BeaconJitter),
                             RandomStream(config_.seed, spec.id, StreamPurpose::Loss)});
  }
  seed_events();
}

void World::seed_events() {
  const double b = config_.beacon_interval;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    queue_.schedule(next_beacon_time(b, 0.0, nodes_[i].jitter), TransmitBeacon{i});
    queue_.schedule(b, EvictCheck{i});
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (const Waypoint& w : nodes_[i].plan.waypoints)
      if (w.time <= config_.duration) queue_.schedule(w.time, MobilityUpdate{i});
  for (std::size_t f = 0; f < config_.flows.size(); ++f) {
    const FlowSpec& flow = config_.flows[f];
    for (std::uint32_t k = 0; k < flow.count; ++k) {
      const double t = flow.start + k * flow.interval;
      if (t <= config_.duration) queue_.schedule(t, OriginatePacket{f, k});
    }
  }
  queue_.schedule(config_.duration, SimulationEnd{});
}

std::size_t World::index_of(NodeId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range(fmt::format("unknown node {}", id.value));
  return it->second;
}

const NeighborTable& World::table(NodeId id) const { return nodes_[index_of(id)].table; }

Position World::position_of(NodeId id, double t) const { return position_at(nodes_[index_of(id)].plan, t); }

Position World::refresh_position(SimNode& node) {
  node.position = position_at(node.plan, now());
  return node.position;
}

Position World::advertised_position(SimNode& node) { return wire_position(refresh_position(node)); }

SimStats World::run() { return run(config_.duration); }

SimStats World::run(double until) {
  while (!ended_ && !queue_.empty() && queue_.top().time <= until) {
    Event event = queue_.pop();
    dispatch(event);
  }
  stats_.in_flight = count_in_flight();
  return stats_;
}

void World::dispatch(Event& event) {
  std::visit(overloaded{
                 [&](const TransmitBeacon& e) { on_transmit_beacon(e.node); },
                 [&](RadioDeliver& e) { on_radio_deliver(e); },
                 [&](const EvictCheck& e) { on_evict_check(e.node); },
                 [&](const OriginatePacket& e) { on_originate(e); },
                 [&](const MobilityUpdate& e) { on_mobility_update(e.node); },
                 [&](const SimulationEnd&) { ended_ = true; },
             },
             event.payload);
}

void World::trace(TraceRecord record) {
  if (trace_) trace_->emit(record);
}

void World::on_transmit_beacon(std::size_t i) {
  SimNode& node = nodes_[i];
  const Beacon beacon{node.id, advertised_position(node)};
  ++stats_.beacons_sent;
  trace({now(), TraceTag::Beacon, node.id, {}, {}, {}, {}, beacon.position, {}});
  transmit_from(i, BeaconFrame{encode_beacon(beacon)});
  queue_.schedule(next_beacon_time(config_.beacon_interval, now(), node.jitter), TransmitBeacon{i});
}

void World::on_radio_deliver(RadioDeliver& delivery) {
  SimNode& node = nodes_[delivery.receiver];
  refresh_position(node);
  if (const auto* beacon_frame = std::get_if<BeaconFrame>(&delivery.frame)) {
    const Beacon beacon = decode_beacon(beacon_frame->image);
    node.table.on_heard(beacon.sender, beacon.position, now());
    trace({now(), TraceTag::Heard, node.id, {}, {}, {}, {}, beacon.position, fmt::format("{}", beacon.sender.value)});
    return;
  }

  const auto& data = std::get<DataFrame>(delivery.frame);
  node.table.on_heard(data.sender, data.sender_position, now());
  trace({now(), TraceTag::Heard, node.id, data.header.packet_id, {}, {}, {}, data.sender_position,
         fmt::format("{}", data.sender.value)});
  if (data.next_hop == node.id)
    process_packet(delivery.receiver, data.header, Neighbor{data.sender, data.sender_position});
}

void World::on_evict_check(std::size_t i) {
  SimNode& node = nodes_[i];
  const Position here = refresh_position(node);
  for (NodeId gone : node.table.evict_stale(now()))
    trace({now(), TraceTag::Evict, node.id, {}, {}, {}, {}, here, fmt::format("{}", gone.value)});
  queue_.schedule(now() + config_.beacon_interval, EvictCheck{i});
}

void World::on_originate(const OriginatePacket& origin) {
  const FlowSpec& flow = config_.flows[origin.flow];
  const std::size_t src = index_of(flow.src);
  SimNode& dst = nodes_[index_of(flow.dst)];

  GpsrHeader header;
  header.packet_id = next_packet_id_++;
  header.source = flow.src;
  header.destination = flow.dst;
  header.dest_position = advertised_position(dst);
  ++stats_.originated;
  trace({now(), TraceTag::Send, flow.src, header.packet_id, header.source, header.destination, header.mode,
         refresh_position(nodes_[src]), {}});
  process_packet(src, header, std::nullopt);
}

void World::on_mobility_update(std::size_t i) {
  SimNode& node = nodes_[i];
  trace({now(), TraceTag::Move, node.id, {}, {}, {}, {}, refresh_position(node), {}});
}

void World::process_packet(std::size_t i, const GpsrHeader& header, const std::optional<Neighbor>& arrived_from) {
  SimNode& node = nodes_[i];
  const Position here = refresh_position(node);
  const std::vector<Neighbor> neighbors = node.table.neighbors();
  const NodeView view{node.id, wire_position(here), neighbors, config_.planarization, config_.ttl};

  ForwardDecision decision = handle_packet(view, header, arrived_from);
  const GpsrHeader& out = decision.header;
  if (!out.coherent())
    throw SimulationError(fmt::format("packet {} header violates mode invariants", out.packet_id));

  auto record = [&](TraceTag tag, GpsrMode mode, std::string extra) {
    trace({now(), tag, node.id, out.packet_id, out.source, out.destination, mode, here, std::move(extra)});
  };

  if (decision.exited_perimeter) {
    ++stats_.perimeter_exits;
    record(TraceTag::ExitPerim, GpsrMode::Greedy, {});
  }
  if (decision.entered_perimeter) {
    ++stats_.perimeter_entries;
    record(TraceTag::EnterPerim, GpsrMode::Perimeter, {});
  }

  if (decision.is_deliver()) {
    ++stats_.delivered;
    stats_.hop_counts.push_back(out.hop_count);
    record(TraceTag::Recv, out.mode, fmt::format("{}", out.hop_count));
  } else if (const Drop* d = decision.drop()) {
    switch (d->reason) {
      case DropReason::NoNeighbors: ++stats_.dropped_no_neighbors; break;
      case DropReason::Unreachable: ++stats_.dropped_unreachable; break;
      case DropReason::Ttl: ++stats_.dropped_ttl; break;
    }
    record(TraceTag::Drop, out.mode, std::string(to_string(d->reason)));
  } else {
    const Forward& fwd = *decision.forward();
    ++(out.mode == GpsrMode::Greedy ? stats_.greedy_hops : stats_.perimeter_hops);
    record(TraceTag::Fwd, out.mode, fmt::format("{}", fwd.next.id.value));
    const auto receivers = transmit_from(i, DataFrame{node.id, view.position, fwd.next.id, out});
    const bool reached = std::any_of(receivers.begin(), receivers.end(),
                                     [&](std::size_t j) { return nodes_[j].id == fwd.next.id; });
    if (!reached) {
      ++stats_.dropped_link;
      record(TraceTag::Drop, out.mode, "LINK_LOSS");
    }
  }
}

std::size_t World::transmit(NodeId sender, const Frame& frame) {
  return transmit_from(index_of(sender), frame).size();
}

std::vector<std::size_t> World::transmit_from(std::size_t i, const Frame& frame) {
  const Position from = refresh_position(nodes_[i]);
  std::vector<std::size_t> receivers;
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    if (j == i) continue;
    if (distance(from, refresh_position(nodes_[j])) > config_.radio_range) continue;
    if (config_.loss_probability > 0.0 && nodes_[i].loss.uniform01() < config_.loss_probability) continue;
    queue_.schedule(now() + config_.propagation_delay, RadioDeliver{j, frame});
    receivers.push_back(j);
  }
  return receivers;
}

std::uint64_t World::count_in_flight() const {
  std::uint64_t pending = 0;
  for (const Event& e : queue_.pending()) {
    const auto* rd = std::get_if<RadioDeliver>(&e.payload);
    if (!rd) continue;
    const auto* data = std::get_if<DataFrame>(&rd->frame);
    if (data && nodes_[rd->receiver].id == data->next_hop) ++pending;
  }
  return pending;
}

}  // namespace gpsr
