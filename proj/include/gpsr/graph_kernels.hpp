#pragma once

// Whole-graph kernels over a node set indexed 0..n-1. Each kernel has a serial
// reference and an OpenMP version that must produce identical output.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gpsr/geometry.hpp"

namespace gpsr {

struct Edge {
  std::uint32_t u = 0;  // u < v
  std::uint32_t v = 0;

  auto operator<=>(const Edge&) const = default;
};

using Adjacency = std::vector<std::vector<std::uint32_t>>;

// Edges with distance <= range, sorted.
std::vector<Edge> unit_disk_edges(std::span<const Position> nodes, double range);
Adjacency adjacency_of(std::size_t node_count, std::span<const Edge> edges);

// Planar subgraph computed the distributed way: node u keeps (u, v) when the filter
// passes against u's other unit-disk neighbors. Sorted edge list.
std::vector<Edge> planar_edges_serial(std::span<const Position> nodes, double range,
                                      Planarization method);
std::vector<Edge> planar_edges(std::span<const Position> nodes, double range, Planarization method);

// Number of unordered edge pairs that cross properly.
std::size_t count_crossings_serial(std::span<const Position> nodes, std::span<const Edge> edges);
std::size_t count_crossings(std::span<const Position> nodes, std::span<const Edge> edges);

}  // namespace gpsr
