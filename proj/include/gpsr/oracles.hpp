#pragma once

// Brute-force references over the unit-disk graph (edge iff distance <= range).
// Nodes are referred to by index.

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "gpsr/graph_kernels.hpp"
#include "gpsr/types.hpp"

namespace gpsr {

using IndexPair = std::pair<std::uint32_t, std::uint32_t>;

// All ordered pairs (u, v) joined by a unit-disk path, including (u, u).
std::set<IndexPair> bfs_reachable(std::span<const Position> nodes, double range);

// Hop distance from `source` to every node; nullopt where unreachable.
std::vector<std::optional<std::uint32_t>> bfs_hops(std::span<const Position> nodes, double range,
                                                   std::uint32_t source);

// Component label per node over an explicit edge list.
std::vector<std::uint32_t> components(std::size_t node_count, std::span<const Edge> edges);
bool is_connected(std::size_t node_count, std::span<const Edge> edges);

}  // namespace gpsr
