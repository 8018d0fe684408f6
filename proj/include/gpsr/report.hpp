#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpsr/scenario.hpp"
#include "gpsr/simulation.hpp"

namespace gpsr {

std::string stats_csv_header();
std::string stats_csv_row(std::uint64_t seed, const SimStats& stats);

struct RunResult {
  std::uint64_t seed = 0;
  SimStats stats;
  std::string trace;  // empty unless traces were requested
};

RunResult run_once(ScenarioConfig config, bool keep_trace);

// Runs seeds config.seed, config.seed + 1, ... as independent worlds. Results are
// in seed order. The OpenMP version distributes worlds across threads.
std::vector<RunResult> run_batch_serial(const ScenarioConfig& config, std::uint32_t repeat, bool keep_traces);
std::vector<RunResult> run_batch(const ScenarioConfig& config, std::uint32_t repeat, bool keep_traces);

// Unit-disk and planarized edges at t = 0, one row per edge:
//   graph,u,v,ux,uy,vx,vy      graph is UDG or the planarization name
std::string graph_csv(const ScenarioConfig& config, Planarization method);

}  // namespace gpsr
