#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gpsr/forwarding.hpp"
#include "gpsr/geometry.hpp"
#include "gpsr/mobility.hpp"

namespace gpsr {

struct NodeSpec {
  NodeId id;
  Position position;

  bool operator==(const NodeSpec&) const = default;
};

struct FlowSpec {
  NodeId src;
  NodeId dst;
  double start = 0.0;
  double interval = 1.0;
  std::uint32_t count = 1;

  bool operator==(const FlowSpec&) const = default;
};

struct ScenarioConfig {
  double radio_range = 0.0;
  double beacon_interval = 1.0;
  double neighbor_timeout = 4.5;
  Planarization planarization = Planarization::GG;
  double duration = 60.0;
  std::uint64_t seed = 0;
  std::uint32_t ttl = kDefaultTtl;
  double propagation_delay = 0.001;
  double loss_probability = 0.0;

  std::vector<NodeSpec> nodes;
  std::map<NodeId, std::vector<Waypoint>> mobility;
  std::vector<FlowSpec> flows;

  MobilityPlan plan_for(const NodeSpec& node) const;

  bool operator==(const ScenarioConfig&) const = default;
};

// Nodes closer than this (as |sin| of the angle they subtend at a common
// neighbor) to sharing a bearing are rejected.
inline constexpr double kCollinearityTolerance = 1e-9;

class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(int line, const std::string& message);

  // 1-based source line, 0 when the problem is not tied to one line.
  int line() const { return line_; }

 private:
  int line_;
};

// Sectioned text format:
//   [params]    key = value
//   [nodes]     id x y
//   [mobility]  id t x y
//   [flows]     src dst start interval count
// '#' starts a comment. Applies defaults, then validates. Throws ScenarioError.
ScenarioConfig parse_scenario(std::string_view text);

// Checks every invariant on an already-built config. Throws ScenarioError.
void validate_scenario(const ScenarioConfig& config);

// Canonical text form; parse_scenario(render_scenario(c)) == c.
std::string render_scenario(const ScenarioConfig& config);

}  // namespace gpsr
