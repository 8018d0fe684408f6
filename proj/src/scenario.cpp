#include "gpsr/scenario.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <unordered_map>

namespace gpsr {

namespace {

enum class Section { None, Params, Nodes, Mobility, Flows };

// Source lines of parsed items, for error messages.
struct LineIndex {
  std::unordered_map<std::string, int> params;
  std::vector<int> nodes;
  std::map<NodeId, std::vector<int>> mobility;
  std::vector<int> flows;

  int param(const std::string& key) const {
    auto it = params.find(key);
    return it == params.end() ? 0 : it->second;
  }
};

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T number(std::string_view token, int line, std::string_view what) {
  T value{};
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ScenarioError(line, fmt::format("invalid {} '{}'", what, token));
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) throw ScenarioError(line, fmt::format("{} must be finite", what));
  }
  return value;
}

void expect_fields(const std::vector<std::string_view>& fields, std::size_t n, int line, std::string_view form) {
  if (fields.size() != n) throw ScenarioError(line, fmt::format("expected '{}', got {} fields", form, fields.size()));
}

void set_param(ScenarioConfig& c, const std::string& key, std::string_view value, int line) {
  if (key == "radio_range") c.radio_range = number<double>(value, line, key);
  else if (key == "beacon_interval") c.beacon_interval = number<double>(value, line, key);
  else if (key == "neighbor_timeout") c.neighbor_timeout = number<double>(value, line, key);
  else if (key == "duration") c.duration = number<double>(value, line, key);
  else if (key == "seed") c.seed = number<std::uint64_t>(value, line, key);
  else if (key == "ttl") c.ttl = number<std::uint32_t>(value, line, key);
  else if (key == "propagation_delay") c.propagation_delay = number<double>(value, line, key);
  else if (key == "loss_probability") c.loss_probability = number<double>(value, line, key);
  else if (key == "planarization") {
    auto method = parse_planarization(value);
    if (!method) throw ScenarioError(line, fmt::format("planarization must be RNG or GG, got '{}'", value));
    c.planarization = *method;
  } else {
    throw ScenarioError(line, fmt::format("unknown key '{}'", key));
  }
}

void validate_impl(const ScenarioConfig& c, const LineIndex* lines) {
  auto at = [&](auto pick) { return lines ? pick(*lines) : 0; };
  auto param_line = [&](const char* key) { return at([&](const LineIndex& l) { return l.param(key); }); };

  if (!(c.radio_range > 0.0)) throw ScenarioError(param_line("radio_range"), "radio_range must be positive");
  if (!(c.beacon_interval > 0.0))
    throw ScenarioError(param_line("beacon_interval"), "beacon_interval must be positive");
  if (!(c.neighbor_timeout > c.beacon_interval))
    throw ScenarioError(param_line("neighbor_timeout"), "neighbor_timeout must exceed beacon_interval");
  if (!(c.duration > 0.0)) throw ScenarioError(param_line("duration"), "duration must be positive");
  if (c.ttl == 0) throw ScenarioError(param_line("ttl"), "ttl must be at least 1");
  if (!(c.propagation_delay >= 0.0))
    throw ScenarioError(param_line("propagation_delay"), "propagation_delay must be nonnegative");
  if (!(c.loss_probability >= 0.0 && c.loss_probability <= 1.0))
    throw ScenarioError(param_line("loss_probability"), "loss_probability must lie in [0, 1]");
  if (c.nodes.empty()) throw ScenarioError(0, "scenario declares no nodes");

  std::map<NodeId, std::size_t> index;
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const int line = at([&](const LineIndex& l) { return l.nodes[i]; });
    if (!is_finite(c.nodes[i].position)) throw ScenarioError(line, "node position must be finite");
    if (!index.emplace(c.nodes[i].id, i).second)
      throw ScenarioError(line, fmt::format("duplicate node id {}", c.nodes[i].id.value));
  }

  for (const auto& [id, wps] : c.mobility) {
    auto line_of = [&](std::size_t k) {
      return at([&](const LineIndex& l) {
        auto it = l.mobility.find(id);
        return it == l.mobility.end() ? 0 : it->second[k];
      });
    };
    if (!index.count(id))
      throw ScenarioError(line_of(0), fmt::format("waypoint for undeclared node {}", id.value));
    for (std::size_t k = 0; k < wps.size(); ++k) {
      if (wps[k].time < 0.0) throw ScenarioError(line_of(k), "waypoint time must be nonnegative");
      if (k > 0 && !(wps[k].time > wps[k - 1].time))
        throw ScenarioError(line_of(k), "waypoint times must strictly increase");
    }
  }

  for (std::size_t f = 0; f < c.flows.size(); ++f) {
    const FlowSpec& flow = c.flows[f];
    const int line = at([&](const LineIndex& l) { return l.flows[f]; });
    for (NodeId end : {flow.src, flow.dst})
      if (!index.count(end)) throw ScenarioError(line, fmt::format("flow references undeclared node {}", end.value));
    if (flow.src == flow.dst) throw ScenarioError(line, "flow source and destination coincide");
    if (flow.start < 0.0) throw ScenarioError(line, "flow start must be nonnegative");
    if (flow.count == 0) throw ScenarioError(line, "flow count must be at least 1");
    if (flow.count > 1 && !(flow.interval > 0.0)) throw ScenarioError(line, "flow interval must be positive");
  }

  // Geometry at t = 0.
  std::vector<Position> start;
  for (const NodeSpec& n : c.nodes) start.push_back(position_at(c.plan_for(n), 0.0));
  for (std::size_t i = 0; i < start.size(); ++i)
    for (std::size_t j = i + 1; j < start.size(); ++j)
      if (start[i] == start[j])
        throw ScenarioError(at([&](const LineIndex& l) { return l.nodes[j]; }),
                            fmt::format("nodes {} and {} coincide", c.nodes[i].id.value, c.nodes[j].id.value));

  // Two neighbors of one node sharing (almost) the same bearing make the sweep degenerate.
  for (std::size_t u = 0; u < start.size(); ++u) {
    std::vector<std::size_t> around;
    for (std::size_t v = 0; v < start.size(); ++v)
      if (v != u && distance(start[u], start[v]) <= c.radio_range) around.push_back(v);
    for (std::size_t a = 0; a < around.size(); ++a) {
      for (std::size_t b = a + 1; b < around.size(); ++b) {
        const Position& o = start[u];
        const Position& p = start[around[a]];
        const Position& q = start[around[b]];
        const double px = p.x - o.x, py = p.y - o.y, qx = q.x - o.x, qy = q.y - o.y;
        const double sine = std::fabs(px * qy - py * qx) / (std::hypot(px, py) * std::hypot(qx, qy));
        if (sine <= kCollinearityTolerance && px * qx + py * qy > 0.0)
          throw ScenarioError(0, fmt::format("nodes {}, {} and {} are collinear on one side of {}",
                                             c.nodes[u].id.value, c.nodes[around[a]].id.value,
                                             c.nodes[around[b]].id.value, c.nodes[u].id.value));
      }
    }
  }
}

}  // namespace

ScenarioError::ScenarioError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? fmt::format("line {}: {}", line, message) : message), line_(line) {}

MobilityPlan ScenarioConfig::plan_for(const NodeSpec& node) const {
  auto it = mobility.find(node.id);
  return MobilityPlan{node.position, it == mobility.end() ? std::vector<Waypoint>{} : it->second};
}

ScenarioConfig parse_scenario(std::string_view text) {
  ScenarioConfig config;
  LineIndex lines;
  Section section = Section::None;
  bool timeout_given = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line == "[params]") section = Section::Params;
      else if (line == "[nodes]") section = Section::Nodes;
      else if (line == "[mobility]") section = Section::Mobility;
      else if (line == "[flows]") section = Section::Flows;
      else throw ScenarioError(line_no, fmt::format("unknown section {}", line));
      continue;
    }

    switch (section) {
      case Section::None:
        throw ScenarioError(line_no, "content outside of any section");
      case Section::Params: {
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ScenarioError(line_no, "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (!lines.params.emplace(key, line_no).second)
          throw ScenarioError(line_no, fmt::format("duplicate key '{}'", key));
        set_param(config, key, value, line_no);
        if (key == "neighbor_timeout") timeout_given = true;
        break;
      }
      case Section::Nodes: {
        const auto f = tokens(line);
        expect_fields(f, 3, line_no, "id x y");
        config.nodes.push_back({NodeId{number<std::uint32_t>(f[0], line_no, "node id")},
                                Position{number<double>(f[1], line_no, "x"), number<double>(f[2], line_no, "y")}});
        lines.nodes.push_back(line_no);
        break;
      }
      case Section::Mobility: {
        const auto f = tokens(line);
        expect_fields(f, 4, line_no, "id t x y");
        const NodeId id{number<std::uint32_t>(f[0], line_no, "node id")};
        config.mobility[id].push_back(
            {number<double>(f[1], line_no, "time"),
             Position{number<double>(f[2], line_no, "x"), number<double>(f[3], line_no, "y")}});
        lines.mobility[id].push_back(line_no);
        break;
      }
      case Section::Flows: {
        const auto f = tokens(line);
        expect_fields(f, 5, line_no, "src dst start interval count");
        config.flows.push_back({NodeId{number<std::uint32_t>(f[0], line_no, "src")},
                                NodeId{number<std::uint32_t>(f[1], line_no, "dst")},
                                number<double>(f[2], line_no, "start"), number<double>(f[3], line_no, "interval"),
                                number<std::uint32_t>(f[4], line_no, "count")});
        lines.flows.push_back(line_no);
        break;
      }
    }
  }

  if (!lines.params.count("radio_range")) throw ScenarioError(0, "missing required key 'radio_range'");
  if (!timeout_given) config.neighbor_timeout = 4.5 * config.beacon_interval;

  validate_impl(config, &lines);
  return config;
}

void validate_scenario(const ScenarioConfig& config) { validate_impl(config, nullptr); }

std::string render_scenario(const ScenarioConfig& c) {
  std::string out;
  auto it = std::back_inserter(out);
  out += "[params]\n";
  fmt::format_to(it, "radio_range = {}\n", c.radio_range);
  fmt::format_to(it, "beacon_interval = {}\n", c.beacon_interval);
  fmt::format_to(it, "neighbor_timeout = {}\n", c.neighbor_timeout);
  fmt::format_to(it, "planarization = {}\n", to_string(c.planarization));
  fmt::format_to(it, "duration = {}\n", c.duration);
  fmt::format_to(it, "seed = {}\n", c.seed);
  fmt::format_to(it, "ttl = {}\n", c.ttl);
  fmt::format_to(it, "propagation_delay = {}\n", c.propagation_delay);
  fmt::format_to(it, "loss_probability = {}\n", c.loss_probability);
  out += "[nodes]\n";
  for (const NodeSpec& n : c.nodes) fmt::format_to(it, "{} {} {}\n", n.id.value, n.position.x, n.position.y);
  out += "[mobility]\n";
  for (const auto& [id, wps] : c.mobility)
    for (const Waypoint& w : wps) fmt::format_to(it, "{} {} {} {}\n", id.value, w.time, w.position.x, w.position.y);
  out += "[flows]\n";
  for (const FlowSpec& f : c.flows)
    fmt::format_to(it, "{} {} {} {} {}\n", f.src.value, f.dst.value, f.start, f.interval, f.count);
  return out;
}

}  // namespace gpsr
