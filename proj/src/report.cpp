#include "gpsr/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <exception>
#include <numeric>
#include <sstream>

#include "gpsr/graph_kernels.hpp"

namespace gpsr {

std::string stats_csv_header() {
  return "seed,originated,delivered,dropped_unreachable,dropped_no_neighbors,dropped_ttl,dropped_link,in_flight,"
         "delivery_ratio,mean_hops,max_hops,greedy_hops,perimeter_hops,perimeter_entries,perimeter_exits,"
         "beacons_sent";
}

std::string stats_csv_row(std::uint64_t seed, const SimStats& s) {
  const double ratio = s.originated ? static_cast<double>(s.delivered) / static_cast<double>(s.originated) : 0.0;
  const double mean_hops =
      s.hop_counts.empty()
          ? 0.0
          : std::accumulate(s.hop_counts.begin(), s.hop_counts.end(), 0.0) / static_cast<double>(s.hop_counts.size());
  const std::uint32_t max_hops = s.hop_counts.empty() ? 0 : *std::max_element(s.hop_counts.begin(), s.hop_counts.end());
  return fmt::format("{},{},{},{},{},{},{},{},{:.6f},{:.6f},{},{},{},{},{},{}", seed, s.originated, s.delivered,
                     s.dropped_unreachable, s.dropped_no_neighbors, s.dropped_ttl, s.dropped_link, s.in_flight, ratio,
                     mean_hops, max_hops, s.greedy_hops, s.perimeter_hops, s.perimeter_entries, s.perimeter_exits,
                     s.beacons_sent);
}

RunResult run_once(ScenarioConfig config, bool keep_trace) {
  RunResult result;
  result.seed = config.seed;
  std::ostringstream out;
  TraceSink sink(keep_trace ? &out : nullptr);
  World world(std::move(config), &sink);
  result.stats = world.run();
  result.trace = out.str();
  return result;
}

std::vector<RunResult> run_batch_serial(const ScenarioConfig& config, std::uint32_t repeat, bool keep_traces) {
  std::vector<RunResult> results;
  for (std::uint32_t k = 0; k < repeat; ++k) {
    ScenarioConfig c = config;
    c.seed = config.seed + k;
    results.push_back(run_once(std::move(c), keep_traces));
  }
  return results;
}

std::vector<RunResult> run_batch(const ScenarioConfig& config, std::uint32_t repeat, bool keep_traces) {
  std::vector<RunResult> results(repeat);
  std::vector<std::exception_ptr> errors(repeat);
  const auto n = static_cast<std::int64_t>(repeat);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < n; ++k) {
    try {
      ScenarioConfig c = config;
      c.seed = config.seed + static_cast<std::uint64_t>(k);
      results[k] = run_once(std::move(c), keep_traces);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

std::string graph_csv(const ScenarioConfig& config, Planarization method) {
  std::vector<Position> nodes;
  for (const NodeSpec& n : config.nodes) nodes.push_back(position_at(config.plan_for(n), 0.0));

  std::string out = "graph,u,v,ux,uy,vx,vy\n";
  auto dump = [&](std::string_view label, const std::vector<Edge>& edges) {
    for (const Edge& e : edges) {
      const NodeSpec& a = config.nodes[e.u];
      const NodeSpec& b = config.nodes[e.v];
      fmt::format_to(std::back_inserter(out), "{},{},{},{:.6f},{:.6f},{:.6f},{:.6f}\n", label, a.id.value, b.id.value,
                     nodes[e.u].x, nodes[e.u].y, nodes[e.v].x, nodes[e.v].y);
    }
  };
  dump("UDG", unit_disk_edges(nodes, config.radio_range));
  dump(to_string(method), planar_edges(nodes, config.radio_range, method));
  return out;
}

}  // namespace gpsr
