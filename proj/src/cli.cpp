#include "gpsr/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "gpsr/graph_kernels.hpp"
#include "gpsr/report.hpp"
#include "gpsr/scenario.hpp"

namespace gpsr {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("write failed for " + path);
}

ScenarioConfig load(const std::string& path) {
  try {
    return parse_scenario(read_file(path));
  } catch (const ScenarioError& e) {
    throw ScenarioError(e.line(), fmt::format("{}: {}", path, e.what()));
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"GPSR geographic routing simulator", "gpsr_sim"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string trace_path;
  std::string stats_path;
  std::optional<std::uint64_t> seed;
  std::uint32_t repeat = 1;
  std::string method_name;
  std::string graph_out;

  auto* run = app.add_subcommand("run", "Simulate a scenario");
  run->add_option("--scenario", scenario_path, "Scenario file")->required();
  run->add_option("--trace", trace_path, "Trace output file");
  run->add_option("--stats", stats_path, "Statistics CSV output file (stdout if omitted)");
  run->add_option("--seed", seed, "Override the scenario seed");
  run->add_option("--repeat", repeat, "Run N consecutive seeds as independent worlds")->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Parse and validate a scenario");
  validate->add_option("--scenario", scenario_path, "Scenario file")->required();

  auto* graph = app.add_subcommand("graph", "Dump unit-disk and planarized edge lists as CSV");
  graph->add_option("--scenario", scenario_path, "Scenario file")->required();
  graph->add_option("--method", method_name, "RNG or GG")->required()->check(CLI::IsMember({"RNG", "GG"}));
  graph->add_option("--out", graph_out, "Output CSV file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "gpsr_sim: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    ScenarioConfig config = load(scenario_path);

    if (*validate) {
      std::vector<Position> nodes;
      for (const NodeSpec& n : config.nodes) nodes.push_back(position_at(config.plan_for(n), 0.0));
      out << fmt::format("OK {} nodes, {} flows, {} unit-disk edges at t=0\n", config.nodes.size(),
                         config.flows.size(), unit_disk_edges(nodes, config.radio_range).size());
      return kExitOk;
    }

    if (*graph) {
      write_file(graph_out, graph_csv(config, *parse_planarization(method_name)));
      return kExitOk;
    }

    if (seed) config.seed = *seed;
    const bool keep_traces = !trace_path.empty();
    const auto results = repeat == 1 ? std::vector<RunResult>{run_once(config, keep_traces)}
                                     : run_batch(config, repeat, keep_traces);

    std::string csv = stats_csv_header() + "\n";
    for (const RunResult& r : results) {
      csv += stats_csv_row(r.seed, r.stats) + "\n";
      if (keep_traces)
        write_file(repeat == 1 ? trace_path : fmt::format("{}.{}", trace_path, r.seed), r.trace);
    }
    if (stats_path.empty())
      out << csv;
    else
      write_file(stats_path, csv);
    return kExitOk;
  } catch (const ScenarioError& e) {
    err << "gpsr_sim: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "gpsr_sim: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace gpsr
